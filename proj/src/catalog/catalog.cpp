#include "hydro/catalog/catalog.hpp"

#include "hydro/catalog/mu.hpp"
#include "hydro/errors.hpp"

#include <algorithm>
#include <functional>

namespace hydro {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

using Rows = std::initializer_list<std::initializer_list<MultiPoly>>;

Bivector sheet(const Ring& r, Rows rows) {
    auto m = zero_poly_matrix(z(r.n), z(r.n), r.nvars());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto& e : row)
            m(i, j++) = e;
        ++i;
    }
    return Bivector(r, std::move(m));
}

std::vector<std::string> kappas(int count, std::vector<std::string> tail = {"lambda"}) {
    std::vector<std::string> p;
    for (int i = 1; i <= count; ++i)
        p.push_back("kappa" + std::to_string(i));
    p.insert(p.end(), tail.begin(), tail.end());
    return p;
}

MultiPoly remap(const MultiPoly& p, int nvars, const std::vector<int>& target) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m;
        for (std::size_t v = 0; v < target.size(); ++v)
            m.e[z(target[v])] = t.m.e[v];
        m.deg = t.m.deg;
        terms.push_back({m, t.c});
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
}

/// A pencil given by g, g~0 and the displayed basis g~1.. of its solution family.
struct Display {
    Ring ring;
    Bivector g;
    Bivector g0;
    std::vector<Bivector> basis;
};

/// Which basis elements enter a normal form, with their coefficients.
using Combination = std::vector<std::pair<int, MultiPoly>>;

Bivector combine(const Display& d, const Combination& c, bool with_g0 = true) {
    Bivector out = with_g0 ? d.g0 : Bivector::zero(d.ring);
    for (const auto& [i, coeff] : c)
        out += d.basis[z(i - 1)] * coeff;
    return out;
}

MultiPoly coefficient_of(const Combination& c, int i, const Ring& r) {
    for (const auto& [k, coeff] : c)
        if (k == i)
            return coeff;
    return r.zero();
}

// Segre [2,2]; s = -1 flips the sign of the second block of g.
Display segre22(const Ring& r, int s) {
    auto U = [&](int k) { return r.u(k); };
    const MultiPoly O = r.zero(), one = r.constant(Rational(1)), L = r.param("lambda");
    const Rational h(1, 2), sh(s, 2);
    const MultiPoly S = r.constant(Rational(s));
    Display d{r, sheet(r, {{O, one, O, O}, {one, O, O, O}, {O, O, O, S}, {O, O, S, O}}),
              sheet(r, {{one, L, O, O}, {L, O, O, O}, {O, O, S, L * Rational(s)}, {O, O, L * Rational(s), O}}),
              {}};
    d.basis.push_back(sheet(r, {{U(1), U(2) * -h, U(3) * h, O},
                                {U(2) * -h, O, O, O},
                                {U(3) * h, O, O, U(2) * -sh},
                                {O, O, U(2) * -sh, O}}));
    d.basis.push_back(sheet(r, {{U(4), O, U(2) * -sh, O}, {O, O, O, O}, {U(2) * -sh, O, O, O}, {O, O, O, O}}));
    d.basis.push_back(sheet(r, {{O, U(4) * h, U(1) * -sh, O},
                                {U(4) * h, O, O, O},
                                {U(1) * -sh, O, U(3) * Rational(-s), U(4) * sh},
                                {O, O, U(4) * sh, O}}));
    d.basis.push_back(sheet(r, {{O, O, U(4) * h, O}, {O, O, O, O}, {U(4) * h, O, U(2) * Rational(-s), O}, {O, O, O, O}}));
    return d;
}

// Segre [3,1]; s is the sign of the 1x1 block of g.
Display segre31(const Ring& r, int s) {
    auto U = [&](int k) { return r.u(k); };
    const MultiPoly O = r.zero(), one = r.constant(Rational(1)), L = r.param("lambda");
    const Rational h(1, 2), sh(s, 2);
    Display d{r, sheet(r, {{O, O, one, O}, {O, one, O, O}, {one, O, O, O}, {O, O, O, r.constant(Rational(s))}}),
              sheet(r, {{O, one, L, O}, {one, L, O, O}, {L, O, O, O}, {O, O, O, L * Rational(s)}}),
              {}};
    d.basis.push_back(sheet(r, {{U(1) * Rational(2), U(2) * h, -U(3), U(4) * h},
                                {U(2) * h, -U(3), O, O},
                                {-U(3), O, O, O},
                                {U(4) * h, O, O, U(3) * Rational(-s)}}));
    d.basis.push_back(sheet(r, {{U(2), U(3) * -h, O, O}, {U(3) * -h, O, O, O}, {O, O, O, O}, {O, O, O, O}}));
    d.basis.push_back(sheet(r, {{U(4), O, O, U(3) * -sh}, {O, O, O, O}, {O, O, O, O}, {U(3) * -sh, O, O, O}}));
    d.basis.push_back(sheet(r, {{O, U(4) * h, O, U(2) * -sh}, {U(4) * h, O, O, O}, {O, O, O, O}, {U(2) * -sh, O, O, O}}));
    return d;
}

Display segre4(const Ring& r) {
    auto U = [&](int k) { return r.u(k); };
    const MultiPoly O = r.zero();
    const Rational h(1, 2);
    Display d{r, Bivector::constant(r, antidiagonal(4)), jordan_constant_part(r, r.param("lambda")), {}};
    d.basis.push_back(sheet(r, {{-U(1), U(2) * -h, O, U(4) * h},
                                {U(2) * -h, O, U(4) * h, O},
                                {O, U(4) * h, O, O},
                                {U(4) * h, O, O, O}}));
    d.basis.push_back(sheet(r, {{U(2) * Rational(2), U(3) * h, -U(4), O},
                                {U(3) * h, -U(4), O, O},
                                {-U(4), O, O, O},
                                {O, O, O, O}}));
    d.basis.push_back(sheet(r, {{U(3), U(4) * -h, O, O}, {U(4) * -h, O, O, O}, {O, O, O, O}, {O, O, O, O}}));
    return d;
}

Bivector complex_first(const Ring& r) {
    auto U = [&](int k) { return r.u(k); };
    const MultiPoly O = r.zero();
    const Rational two(2);
    return sheet(r, {{U(2) * two, U(1) * -two, -U(4), U(3)},
                     {U(1) * -two, U(2) * -two, U(3), U(4)},
                     {-U(4), U(3), O, O},
                     {U(3), U(4), O, O}});
}

Display complex_pair(const Ring& r) {
    auto U = [&](int k) { return r.u(k); };
    const MultiPoly O = r.zero(), one = r.constant(Rational(1)), L = r.param("lambda"), N = r.param("nu");
    Display d{r, Bivector::constant(r, antidiagonal(4)),
              sheet(r, {{O, one, -L, N}, {one, O, N, L}, {-L, N, O, O}, {N, L, O, O}}), {}};
    const Rational two(2);
    d.basis.push_back(complex_first(r));
    d.basis.push_back(sheet(r, {{U(1) * two, U(2) * two, -U(3), -U(4)},
                                {U(2) * two, U(1) * -two, -U(4), U(3)},
                                {-U(3), -U(4), O, O},
                                {-U(4), U(3), O, O}}));
    return d;
}

OperatorSpec pair(const Bivector& g, const Bivector& h, bool reducible = false) {
    return OperatorSpec(g.ring(), {LinearMetric(g), LinearMetric(h)}, reducible);
}

ExpectedEigenvalue real_eigenvalue(MultiPoly re) {
    MultiPoly im(re.nvars());
    return {std::move(re), std::move(im)};
}

class Builder {
  public:
    std::vector<CatalogEntry> entries;

    CatalogEntry& add(std::string id, std::string family, std::string description, OperatorSpec spec,
                      std::string segre = {}, std::vector<ExpectedEigenvalue> eig = {}) {
        entries.push_back({std::move(id), std::move(family), std::move(description), std::move(spec),
                           std::move(segre), std::move(eig)});
        return entries.back();
    }

    void two_component() {
        Ring r(2);
        Bivector g = Bivector::constant(r, antidiagonal(2));
        Bivector h = sheet(r, {{r.u(1) * Rational(-2), r.u(2)}, {r.u(2), r.zero()}});
        add("two-component", "two-component", "simplest non-constant pair, g~ = [[-2u1, u2], [u2, 0]]",
            pair(g, h), "[2]", {real_eigenvalue(r.u(2))});
        Ring one(1, {"lambda"});
        OperatorSpec trivial(one, {LinearMetric(one, RationalMatrix(1, 1, Rational(1))),
                                   LinearMetric(Bivector(one, PolyMatrix(1, 1, one.param("lambda"))))});
        OperatorSpec sum = direct_sum(pair(g, h), trivial);
        Ring sr = sum.ring;
        add("reducible-three-component", "reducible-three-component",
            "two-component pair plus a constant one-component operator", sum, "[2 | 1]",
            {real_eigenvalue(sr.u(2)), real_eigenvalue(sr.param("lambda"))});
    }

    void mokhov() {
        for (int n = 2; n <= 7; ++n) {
            Ring r(n);
            MultiPoly e = r.u(n) * Rational(n - 1);
            add("mokhov-n" + std::to_string(n), "mokhov", "g antidiagonal, g~ = mu(n;0)", mokhov_operator(n),
                n == 4 ? "[2,2]" : "[" + std::to_string(n) + "]", {real_eigenvalue(e)});
        }
        for (int n = 3; n <= 6; ++n) {
            OperatorSpec p = shifted_mokhov_operator(n);
            add("mokhov-shift-n" + std::to_string(n), "mokhov-shift", "g~ = mu(n;1) + lambda g", p,
                "[" + std::to_string(n) + "]", {real_eigenvalue(p.ring.param("lambda"))});
        }
    }

    void jordan3() {
        Ring r(3, {"lambda"});
        auto U = [&](int k) { return r.u(k); };
        const MultiPoly O = r.zero(), L = r.param("lambda");
        Bivector g = Bivector::constant(r, antidiagonal(3));
        add("jordan3-constant-eigenvalue", "jordan3", "three components, single Jordan block, eigenvalue lambda",
            pair(g, sheet(r, {{U(2) * Rational(-2), U(3), L}, {U(3), L, O}, {L, O, O}})), "[3]",
            {real_eigenvalue(L)});
        Ring r0(3);
        const MultiPoly O0 = r0.zero();
        const Rational h(1, 2);
        Bivector h2 = sheet(r0, {{r0.u(1) * Rational(-2), r0.u(2) * -h, r0.u(3)},
                                 {r0.u(2) * -h, r0.u(3), O0},
                                 {r0.u(3), O0, O0}});
        add("jordan3-mokhov", "jordan3", "three components, single Jordan block, eigenvalue u3",
            pair(Bivector::constant(r0, antidiagonal(3)), h2), "[3]", {real_eigenvalue(r0.u(3))});
    }

    void jordan_forms() {
        for (int n = 3; n <= 7; ++n) {
            const bool extra = n % 3 == 1;
            Ring r(n, n == 4 ? kappas(1) : extra ? kappas(1, {}) : std::vector<std::string>{});
            Bivector h = mu_bivector(r, 0);
            if (extra)
                h += mu_bivector(r, (n - 1) / 3) * r.param("kappa1");
            MultiPoly e = r.u(n) * Rational(n - 1);
            if (n == 4) {
                h += jordan_constant_part(r, r.param("lambda"));
                e += r.param("lambda");
            }
            add("jordan-normal-form-n" + std::to_string(n), "jordan-normal-form",
                "single Jordan block with non-constant eigenvalue, reduced form",
                pair(Bivector::constant(r, antidiagonal(z(n))), h), "[" + std::to_string(n) + "]",
                {real_eigenvalue(e)});
        }
        for (int n = 3; n <= 6; ++n)
            for (int a = 1; a <= n - 2; ++a) {
                const bool extra = (n - 1 + 2 * a) % 3 == 0 && a + (n - 1 + 2 * a) / 3 <= n - 2;
                Ring r(n, extra ? kappas(1) : std::vector<std::string>{"lambda"});
                Bivector h = mu_bivector(r, a) + jordan_constant_part(r, r.param("lambda"));
                if (extra)
                    h += mu_bivector(r, a + (n - 1 + 2 * a) / 3) * r.param("kappa1");
                add("jordan-constant-eigenvalue-n" + std::to_string(n) + "-alpha" + std::to_string(a),
                    "jordan-constant-eigenvalue", "single Jordan block with constant eigenvalue, reduced form",
                    pair(Bivector::constant(r, antidiagonal(z(n))), h), "[" + std::to_string(n) + "]",
                    {real_eigenvalue(r.param("lambda"))});
            }
    }

    void family(const std::string& family, const std::string& id, const std::string& description,
                const Display& d, const Combination& c, const std::string& segre,
                const std::function<std::vector<ExpectedEigenvalue>(const Combination&)>& eig) {
        add(id, family, description, pair(d.g, combine(d, c)), segre, eig ? eig(c) : std::vector<ExpectedEigenvalue>{});
    }

    void four_component() {
        for (int s : {1, -1}) {
            const std::string tag = s > 0 ? "plus" : "minus";
            auto eig22 = [](const Ring& r) {
                return [r](const Combination& c) {
                    MultiPoly e = (coefficient_of(c, 3, r) * r.u(4) - coefficient_of(c, 1, r) * r.u(2)) * Rational(1, 2) +
                                  r.param("lambda");
                    return std::vector<ExpectedEigenvalue>{real_eigenvalue(e)};
                };
            };
            {
                Ring r(4, kappas(4));
                Display d = segre22(r, s);
                Combination all;
                for (int i = 1; i <= 4; ++i)
                    all.emplace_back(i, r.param("kappa" + std::to_string(i)));
                family("segre22-" + tag, "segre22-" + tag + "-general", "two 2x2 blocks, one eigenvalue, general family", d,
                       all, "[2,2]", eig22(r));
            }
            auto k = [](const Ring& r, int i) { return r.param("kappa" + std::to_string(i)); };
            auto one = [](const Ring& r) { return r.constant(Rational(1)); };
            if (s > 0) {
                Ring r(4, kappas(2));
                family("segre22-plus", "segre22-plus-normal", "two 2x2 blocks, one eigenvalue, normal form", segre22(r, s),
                       {{1, k(r, 1)}, {2, k(r, 2)}}, "[2,2]", eig22(r));
            } else {
                Ring r2(4, kappas(2));
                Display d2 = segre22(r2, s);
                family("segre22-minus", "segre22-minus-b1", "two 2x2 blocks, one eigenvalue, normal form", d2,
                       {{1, k(r2, 1)}, {4, k(r2, 2)}}, "[2,2]", eig22(r2));
                family("segre22-minus", "segre22-minus-b2", "two 2x2 blocks, one eigenvalue, normal form", d2,
                       {{2, k(r2, 1)}, {3, k(r2, 2)}}, "[2,2]", eig22(r2));
                Ring r0(4, {"lambda"});
                Display d0 = segre22(r0, s);
                for (int sign : {1, -1})
                    family("segre22-minus", std::string("segre22-minus-b3-") + (sign > 0 ? "plus" : "minus"),
                           "two 2x2 blocks, one eigenvalue, normal form", d0,
                           {{2, one(r0)}, {4, one(r0) * Rational(sign)}}, "[2,2]", eig22(r0));
                Ring r1(4, kappas(1));
                Display d1 = segre22(r1, s);
                for (int sign : {1, -1})
                    family("segre22-minus", std::string("segre22-minus-b4-") + (sign > 0 ? "plus" : "minus"),
                           "two 2x2 blocks, one eigenvalue, normal form", d1,
                           {{1, one(r1)}, {3, one(r1) * Rational(sign)}, {4, k(r1, 1)}}, "[2,2]", eig22(r1));
            }
            auto eig31 = [](const Ring& r) {
                return [r](const Combination& c) {
                    return std::vector<ExpectedEigenvalue>{
                        real_eigenvalue(r.param("lambda") - coefficient_of(c, 1, r) * r.u(3))};
                };
            };
            {
                Ring r(4, kappas(4));
                Combination all;
                for (int i = 1; i <= 4; ++i)
                    all.emplace_back(i, k(r, i));
                family("segre31-" + tag, "segre31-" + tag + "-general", "3x3 and 1x1 blocks, one eigenvalue, general family",
                       segre31(r, s), all, "[3,1]", eig31(r));
            }
            Ring r2(4, kappas(2)), r3(4, kappas(3));
            family("segre31-" + tag, "segre31-" + tag + "-b1", "3x3 and 1x1 blocks, one eigenvalue, normal form",
                   segre31(r2, s), {{2, k(r2, 1)}, {3, k(r2, 2)}}, "[3,1]", eig31(r2));
            family("segre31-" + tag, "segre31-" + tag + "-b2", "3x3 and 1x1 blocks, one eigenvalue, normal form",
                   segre31(r2, s), {{3, k(r2, 1)}, {4, k(r2, 2)}}, "[3,1]", eig31(r2));
            family("segre31-" + tag, "segre31-" + tag + "-b3", "3x3 and 1x1 blocks, one eigenvalue, normal form",
                   segre31(r3, s), {{1, k(r3, 1)}, {2, k(r3, 2)}, {4, k(r3, 3)}}, "[3,1]", eig31(r3));
        }
        auto eig4 = [](const Ring& r) {
            return [r](const Combination& c) {
                return std::vector<ExpectedEigenvalue>{
                    real_eigenvalue(coefficient_of(c, 1, r) * r.u(4) * Rational(1, 2) + r.param("lambda"))};
            };
        };
        {
            Ring r(4, kappas(3));
            family("segre4", "segre4-general", "single 4x4 block, general family", segre4(r),
                   {{1, r.param("kappa1")}, {2, r.param("kappa2")}, {3, r.param("kappa3")}}, "[4]", eig4(r));
            Ring r1(4, kappas(1));
            family("segre4", "segre4-varying", "single 4x4 block, non-constant eigenvalue", segre4(r1),
                   {{1, r1.constant(Rational(1))}, {2, r1.param("kappa1")}}, "[4]", eig4(r1));
            Ring r0(4, {"lambda"});
            family("segre4", "segre4-constant-b1", "single 4x4 block, constant eigenvalue", segre4(r0),
                   {{2, r0.constant(Rational(1))}}, "[4]", eig4(r0));
            family("segre4", "segre4-constant-b2", "single 4x4 block, constant eigenvalue", segre4(r1),
                   {{3, r1.param("kappa1")}}, "[4]", eig4(r1));
        }
        {
            Ring r(4, kappas(2, {"lambda", "nu"}));
            family("complex", "complex-general", "two complex conjugate 2x2 blocks, general family", complex_pair(r),
                   {{1, r.param("kappa1")}, {2, r.param("kappa2")}}, "[2c | 2c]", nullptr);
            Ring r0(4);
            Bivector g = Bivector::constant(r0, antidiagonal(4));
            Bivector h = complex_first(r0);
            add("complex-normal", "complex", "two complex conjugate 2x2 blocks, normal form", pair(g, h), "[2c | 2c]",
                {{r0.u(3), r0.u(4)}});
        }
    }

    void three_dimensional() {
        Ring r(3);
        const MultiPoly O = r.zero(), one = r.constant(Rational(1));
        Bivector eta = Bivector::constant(r, antidiagonal(3));
        // degenerate metrics are shifted by the constant first one (a linear change of x, y, z)
        Bivector y1 = mu_bivector(r, 1) + eta;
        Bivector z1 = sheet(r, {{one, O, O}, {O, O, O}, {O, O, O}}) + eta;
        add("three-dimensional-irreducible", "three-dimensional",
            "irreducible three components in three dimensions; metrics x, y + x, z + x",
            OperatorSpec(r, {LinearMetric(eta), LinearMetric(y1), LinearMetric(z1)}));
        Bivector x2 = sheet(r, {{O, one, O}, {one, O, O}, {O, O, one}});
        Bivector y2 = sheet(r, {{r.u(1) * Rational(-2), r.u(2), O}, {r.u(2), O, O}, {O, O, O}}) + x2;
        Bivector z2 = sheet(r, {{O, O, O}, {O, O, O}, {O, O, one}}) + x2;
        add("three-dimensional-reducible", "three-dimensional",
            "two-component pair plus d/dz in three dimensions; metrics x + z, y + x + z, z + x + z",
            OperatorSpec(r, {LinearMetric(x2), LinearMetric(y2), LinearMetric(z2)}, true));
        for (int N = 3; N <= 5; ++N) {
            Ring rn(N, {"lambda"});
            Bivector e = Bivector::constant(rn, antidiagonal(z(N)));
            RationalMatrix ones(z(N), z(N), Rational(0));
            for (int i = 1; i < N; ++i)
                ones(z(i - 1), z(N - i - 1)) = Rational(1);
            Bivector g = mu_bivector(rn, N - 2) + Bivector::constant(rn, ones) + e * rn.param("lambda");
            std::vector<LinearMetric> metrics{LinearMetric(e), LinearMetric(g)};
            for (int m = 1; m <= N - 2; ++m) {
                RationalMatrix hm(z(N), z(N), Rational(0));
                hm(z(m - 1), z(m - 1)) = Rational(1);
                metrics.emplace_back(Bivector::constant(rn, hm) + e);
            }
            add("multidimensional-n" + std::to_string(N), "multidimensional",
                "irreducible N components in N dimensions; constant metrics shifted by the first",
                OperatorSpec(rn, std::move(metrics)));
        }
    }
};

} // namespace

OperatorSpec mokhov_operator(int n) {
    if (n < 2)
        throw OutOfRange("Mokhov operator needs n >= 2, got " + std::to_string(n));
    Ring r(n);
    auto m = zero_poly_matrix(z(n), z(n), r.nvars());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j - 1 <= n)
                m(z(i - 1), z(j - 1)) = r.u(i + j - 1) * Rational((3 * j - n - 2) + (3 * i - n - 2));
    return pair(Bivector::constant(r, antidiagonal(z(n))), Bivector(r, std::move(m)));
}

OperatorSpec shifted_mokhov_operator(int n) {
    if (n < 3)
        throw OutOfRange("shifted Mokhov operator needs n >= 3, got " + std::to_string(n));
    Ring r(n, {"lambda"});
    Bivector g = Bivector::constant(r, antidiagonal(z(n)));
    auto m = zero_poly_matrix(z(n), z(n), r.nvars());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j <= n)
                m(z(i - 1), z(j - 1)) = r.u(i + j) * Rational((3 * j - n - 1) + (3 * i - n - 1));
    return pair(g, Bivector(r, std::move(m)) + g * r.param("lambda"));
}

OperatorSpec direct_sum(const OperatorSpec& a, const OperatorSpec& b) {
    if (a.d() != b.d())
        throw DimensionMismatch("direct sum of operators with " + std::to_string(a.d()) + " and " +
                                std::to_string(b.d()) + " metrics");
    Ring r(a.n() + b.n(), a.ring.params);
    for (const auto& p : b.ring.params)
        if (std::find(r.params.begin(), r.params.end(), p) == r.params.end())
            r.params.push_back(p);
    auto targets = [&](const Ring& src, int offset) {
        std::vector<int> t;
        for (int i = 0; i < src.n; ++i)
            t.push_back(offset + i);
        for (const auto& p : src.params)
            t.push_back(r.n + static_cast<int>(std::find(r.params.begin(), r.params.end(), p) - r.params.begin()));
        return t;
    };
    auto ta = targets(a.ring, 0), tb = targets(b.ring, a.n());
    std::vector<LinearMetric> metrics;
    for (int m = 0; m < a.d(); ++m) {
        auto out = zero_poly_matrix(z(r.n), z(r.n), r.nvars());
        const auto& ma = a.metrics[z(m)];
        const auto& mb = b.metrics[z(m)];
        for (int i = 0; i < a.n(); ++i)
            for (int j = 0; j < a.n(); ++j)
                out(z(i), z(j)) = remap(ma(i, j), r.nvars(), ta);
        for (int i = 0; i < b.n(); ++i)
            for (int j = 0; j < b.n(); ++j)
                out(z(a.n() + i), z(a.n() + j)) = remap(mb(i, j), r.nvars(), tb);
        metrics.emplace_back(Bivector(r, std::move(out)));
    }
    return OperatorSpec(r, std::move(metrics), true);
}

OperatorSpec negate(const OperatorSpec& p) {
    std::vector<LinearMetric> metrics;
    for (const auto& m : p.metrics)
        metrics.emplace_back(Bivector(m) * Rational(-1));
    return OperatorSpec(p.ring, std::move(metrics), p.reducible);
}

const std::vector<PencilNormalForm>& pencil_normal_forms() {
    static const std::vector<PencilNormalForm> all = [] {
        std::vector<PencilNormalForm> out;
        auto push = [&](std::string id, std::string segre, const Display& d) {
            out.push_back({std::move(id), std::move(segre), d.g, d.g0, d.basis});
        };
        {
            Ring r(3, {"lambda"});
            Display d{r, Bivector::constant(r, antidiagonal(3)), jordan_constant_part(r, r.param("lambda")),
                      {mu_bivector(r, 0) * Rational(1, 2), mu_bivector(r, 1)}};
            push("segre3", "[3]", d);
        }
        Ring r(4, {"lambda"});
        push("segre22-plus", "[2,2]", segre22(r, 1));
        push("segre22-minus", "[2,2]", segre22(r, -1));
        push("segre31-plus", "[3,1]", segre31(r, 1));
        push("segre31-minus", "[3,1]", segre31(r, -1));
        push("segre4", "[4]", segre4(r));
        push("complex", "[2c | 2c]", complex_pair(Ring(4, {"lambda", "nu"})));
        return out;
    }();
    return all;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> all = [] {
        Builder b;
        b.two_component();
        b.jordan3();
        b.mokhov();
        b.jordan_forms();
        b.four_component();
        b.three_dimensional();
        return std::move(b.entries);
    }();
    return all;
}

std::vector<CatalogEntry> find_entries(const std::string& key, std::optional<int> n) {
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog())
        if ((e.id == key || e.family == key) && (!n || e.n() == *n))
            out.push_back(e);
    return out;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id)
            return e;
    throw OutOfRange("unknown catalog entry '" + id + "'");
}

} // namespace hydro
