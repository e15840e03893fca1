#include "hydro/frobenius/frobenius.hpp"

#include "hydro/errors.hpp"
#include "hydro/exact/linalg.hpp"

#include <initializer_list>

namespace hydro {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

std::string at(std::initializer_list<int> idx) {
    std::string s;
    for (int i : idx)
        s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return "(" + s + ")";
}

std::size_t offset(const std::vector<int>& idx, int n) {
    std::size_t off = 0;
    for (int i : idx)
        off = off * z(n) + z(i);
    return off;
}

Tensor<MultiPoly> to_poly(const Tensor<Rational>& t, int nvars) {
    Tensor<MultiPoly> out(t.n(), t.rank(), MultiPoly(nvars));
    for (std::size_t k = 0; k < t.size(); ++k)
        out.flat(k) = MultiPoly(nvars, t.flat(k));
    return out;
}

/// Lie_X t = s t exactly for a rational s, read off the first nonzero entry of t.
std::optional<Rational> scaling(const Tensor<MultiPoly>& t, int upper, const VectorField& X) {
    Tensor<MultiPoly> lie = lie_derivative(t, upper, X);
    auto first = t.first_nonzero();
    if (!first)
        return std::nullopt;
    const MultiPoly& base = t.flat(*first);
    if (!base.is_constant() || !lie.flat(*first).is_constant())
        return std::nullopt;
    Rational s = lie.flat(*first).constant_term() / base.constant_term();
    for (std::size_t k = 0; k < t.size(); ++k)
        if (!(lie.flat(k) == t.flat(k) * s))
            return std::nullopt;
    return s;
}

AxiomResult scaling_axiom(const std::string& name, const std::optional<Rational>& measured,
                          const Rational& normalizer, const Rational& expected) {
    AxiomResult r{name, false, ""};
    if (!measured) {
        r.witness = "not proportional";
        return r;
    }
    Rational got = *measured / normalizer;
    r.passed = got == expected;
    if (!r.passed)
        r.witness = "factor " + got.str() + ", expected " + expected.str();
    return r;
}

} // namespace

Tensor<Rational> FrobeniusData::lowered() const {
    Tensor<Rational> out(n, 3, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < n; ++s) {
            const Rational& gis = g(z(i), z(s));
            if (gis.is_zero())
                continue;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    out(i, j, k) += gis * c(s, j, k);
        }
    return out;
}

MultiPoly FrobeniusData::potential() const {
    Ring ring(n);
    Tensor<Rational> low = lowered();
    MultiPoly F = ring.zero();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!low(i, j, k).is_zero())
                    F += ring.u(i + 1) * ring.u(j + 1) * ring.u(k + 1) * low(i, j, k);
    return F * Rational(1, 6);
}

FrobeniusData build_cp_frobenius(int n) {
    if (n < 2)
        throw OutOfRange("Frobenius structure needs n >= 2, got " + std::to_string(n));
    FrobeniusData f;
    f.n = n;
    f.g = antidiagonal(n);
    f.c = Tensor<Rational>(n, 3, Rational(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (j + k - i == n)
                    f.c(i - 1, j - 1, k - 1) = Rational(1);
    f.e.assign(z(n), Rational(0));
    f.e[z(n - 1)] = Rational(1);
    Ring ring(n);
    for (int k = 1; k <= n; ++k)
        f.E.push_back(ring.u(k) * Rational(3 * k - 2 * n - 1));
    f.charge = 3;
    return f;
}

Tensor<MultiPoly> lie_derivative(const Tensor<MultiPoly>& t, int upper, const VectorField& X) {
    const int n = t.n();
    if (static_cast<int>(X.size()) != n)
        throw DimensionMismatch("vector field of length " + std::to_string(X.size()));
    const int nvars = X.empty() ? 0 : X[0].nvars();
    std::vector<std::vector<MultiPoly>> dX(z(n)); // dX[i][s] = d_s X^i
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < n; ++s)
            dX[z(i)].push_back(X[z(i)].diff(s));
    Tensor<MultiPoly> out(n, t.rank(), MultiPoly(nvars));
    for (std::size_t pos = 0; pos < t.size(); ++pos) {
        MultiPoly acc(nvars);
        for (int s = 0; s < n; ++s)
            if (!X[z(s)].is_zero())
                acc += X[z(s)] * t.flat(pos).diff(s);
        std::vector<int> idx = t.unflatten(pos);
        for (int p = 0; p < t.rank(); ++p) {
            const int orig = idx[z(p)];
            for (int s = 0; s < n; ++s) {
                idx[z(p)] = s;
                const MultiPoly& ts = t.flat(offset(idx, n));
                if (ts.is_zero())
                    continue;
                if (p < upper)
                    acc -= ts * dX[z(orig)][z(s)];
                else
                    acc += ts * dX[z(s)][z(orig)];
            }
            idx[z(p)] = orig;
        }
        out.flat(pos) = std::move(acc);
    }
    return out;
}

bool FrobeniusReport::passed() const {
    for (const auto& a : axioms)
        if (!a.passed)
            return false;
    return true;
}

const AxiomResult& FrobeniusReport::axiom(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.name == name)
            return a;
    throw OutOfRange("no axiom named " + name);
}

FrobeniusReport check_frobenius_axioms(const FrobeniusData& f) {
    const int n = f.n;
    if (f.c.n() != n || f.c.rank() != 3 || f.g.rows() != z(n) || f.g.cols() != z(n) ||
        f.e.size() != z(n) || f.E.size() != z(n))
        throw DimensionMismatch("Frobenius data of inconsistent size");
    FrobeniusReport rep;
    rep.n = n;
    auto fail = [&](const std::string& name, const std::string& witness) {
        rep.axioms.push_back({name, false, witness});
    };
    auto pass = [&](const std::string& name) { rep.axioms.push_back({name, true, ""}); };
    const auto& c = f.c;

    [&] {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (!(c(i, j, k) == c(i, k, j)))
                        return fail("commutativity", at({i, j, k}));
        pass("commutativity");
    }();

    [&] {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int h = 0; h < n; ++h) {
                        Rational lhs, rhs;
                        for (int l = 0; l < n; ++l) {
                            lhs += c(i, j, l) * c(l, k, h);
                            rhs += c(i, k, l) * c(l, j, h);
                        }
                        if (!(lhs == rhs))
                            return fail("associativity", at({i, j, k, h}));
                    }
        pass("associativity");
    }();

    [&] {
        if (!(f.g == f.g.transpose()) || determinant(f.g).is_zero())
            return fail("invariance", "metric not symmetric and nondegenerate");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    Rational lhs, rhs;
                    for (int k = 0; k < n; ++k) {
                        lhs += f.g(z(i), z(k)) * c(k, j, l);
                        rhs += f.g(z(j), z(k)) * c(k, i, l);
                    }
                    if (!(lhs == rhs))
                        return fail("invariance", at({i, j, l}));
                }
        pass("invariance");
    }();

    // e is constant in flat coordinates, so only e o X = X remains
    [&] {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                Rational s;
                for (int j = 0; j < n; ++j)
                    s += c(i, j, k) * f.e[z(j)];
                if (!(s == Rational(i == k ? 1 : 0)))
                    return fail("flat-unity", at({i, k}));
            }
        pass("flat-unity");
    }();

    [&] {
        MultiPoly F = f.potential();
        Tensor<Rational> low = f.lowered();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    MultiPoly d3 = F.diff(i).diff(j).diff(k);
                    if (!d3.is_constant() || !(d3.constant_term() == low(i, j, k)))
                        return fail("potential", at({i, j, k}));
                }
        pass("potential");
    }();

    // the metric is recovered from the potential along the unity
    [&] {
        Tensor<Rational> low = f.lowered();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s;
                for (int k = 0; k < n; ++k)
                    s += f.e[z(k)] * low(k, i, j);
                if (!(s == f.g(z(i), z(j))))
                    return fail("metric-from-unity", at({i, j}));
            }
        pass("metric-from-unity");
    }();

    const int nvars = f.E.empty() ? n : f.E[0].nvars();
    [&] {
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (!f.E[z(i)].diff(a).diff(b).is_zero())
                        return fail("euler-linear", at({i, a, b}));
        pass("euler-linear");
    }();

    Tensor<MultiPoly> e(n, 1, MultiPoly(nvars));
    for (int i = 0; i < n; ++i)
        e(i) = MultiPoly(nvars, f.e[z(i)]);
    Tensor<MultiPoly> g(n, 2, MultiPoly(nvars));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(i, j) = MultiPoly(nvars, f.g(z(i), z(j)));
    rep.unity_scaling = scaling(e, 1, f.E);
    rep.product_scaling = scaling(to_poly(c, nvars), 1, f.E);
    rep.metric_scaling = scaling(g, 0, f.E);

    const Rational norm(n - 1);
    rep.axioms.push_back(scaling_axiom("euler-unity", rep.unity_scaling, norm, Rational(-1)));
    rep.axioms.push_back(scaling_axiom("euler-product", rep.product_scaling, norm, Rational(1)));
    rep.axioms.push_back(scaling_axiom("euler-metric", rep.metric_scaling, norm, Rational(2 - f.charge)));
    return rep;
}

Bivector intersection_form(const FrobeniusData& f) {
    const int n = f.n;
    Ring ring(n);
    RationalMatrix ginv = inverse(f.g);
    auto m = zero_poly_matrix(z(n), z(n), ring.nvars());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                const Rational& gil = ginv(z(i), z(l));
                if (gil.is_zero())
                    continue;
                for (int k = 0; k < n; ++k)
                    if (!f.c(j, l, k).is_zero())
                        m(z(i), z(j)) += f.E[z(k)] * (gil * f.c(j, l, k));
            }
    return Bivector(ring, std::move(m));
}

Tensor<Rational> cohomology_ring_constants(int n) {
    if (n < 1)
        throw OutOfRange("cohomology ring of size " + std::to_string(n));
    Tensor<Rational> c(n, 3, Rational(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (j + k - i == 1)
                    c(i - 1, j - 1, k - 1) = Rational(1);
    return c;
}

Tensor<Rational> reverse_labels(const Tensor<Rational>& c) {
    const int n = c.n();
    Tensor<Rational> out(n, 3, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out(n - 1 - i, n - 1 - j, n - 1 - k) = c(i, j, k);
    return out;
}

bool cohomology_ring_correspondence(int n) {
    return reverse_labels(cohomology_ring_constants(n)) == build_cp_frobenius(n).c;
}

} // namespace hydro
