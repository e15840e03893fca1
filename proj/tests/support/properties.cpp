#include "properties.hpp"

#include "corpus.hpp"

#include "hydro/catalog/catalog.hpp"
#include "hydro/exact/gaussian.hpp"
#include "hydro/exact/poly_matrix.hpp"
#include "hydro/pencil/segre.hpp"
#include "hydro/tensor/geometry.hpp"
#include "hydro/tensor/verify.hpp"

namespace hydro::testing {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

PropertyResult fail(PropertyResult r, std::string what) {
    r.ok = false;
    r.detail = std::move(what);
    return r;
}

/// Passing and failing pairs shared by the pencil properties: the seeded
/// random corpus at n = 2, 3 and the two-metric catalog entries up to n = 4
/// without formal parameters.
std::vector<CorpusPair> pencil_corpus(std::uint64_t seed) {
    std::vector<CorpusPair> out;
    for (int n : {2, 3})
        for (auto& p : random_pairs(n, 15, seed + static_cast<std::uint64_t>(n)))
            out.push_back(std::move(p));
    for (const auto& e : catalog())
        if (e.d() == 2 && e.n() <= 4 && e.spec.ring.params.empty())
            out.push_back({e.id, e.spec.metrics[0], e.spec.metrics[1]});
    return out;
}

} // namespace

PropertyResult field_axioms(std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int t = 0; t < 200; ++t, ++r.cases) {
        Rational a = random_rational(rng, 50, 20), b = random_rational(rng, 50, 20), c = random_rational(rng, 50, 20);
        if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c)))
            return fail(r, "rational associativity at " + a.str() + ", " + b.str() + ", " + c.str());
        if (!(a + b == b + a) || !(a * b == b * a))
            return fail(r, "rational commutativity at " + a.str() + ", " + b.str());
        if (!(a * (b + c) == a * b + a * c))
            return fail(r, "rational distributivity at " + a.str() + ", " + b.str() + ", " + c.str());
        if (!(a + (-a)).is_zero() || (!a.is_zero() && !(a * a.inverse()).is_one()))
            return fail(r, "rational inverses at " + a.str());
        if (a.denominator() <= 0 || ::gcd(a.numerator(), a.denominator()) != 1)
            return fail(r, "rational not reduced: " + a.str());

        GaussianRational x(a, b), y(c, a - b), w(b * c, Rational(t % 7 - 3));
        if (!((x + y) + w == x + (y + w)) || !((x * y) * w == x * (y * w)))
            return fail(r, "gaussian associativity at " + x.str() + ", " + y.str() + ", " + w.str());
        if (!(x * (y + w) == x * y + x * w) || !(x * y == y * x))
            return fail(r, "gaussian distributivity at " + x.str() + ", " + y.str() + ", " + w.str());
        if (!x.is_zero() && !(x * x.inverse() == GaussianRational(1)))
            return fail(r, "gaussian inverse at " + x.str());
        if (!y.is_zero() && !((x / y) * y == x))
            return fail(r, "gaussian division at " + x.str() + " / " + y.str());
    }
    return r;
}

PropertyResult leibniz_rule(std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int t = 0; t < 60; ++t, ++r.cases) {
        const int nv = 1 + t % 4;
        MultiPoly a = random_poly(rng, nv, 5, 4), b = random_poly(rng, nv, 5, 4);
        for (int k = 0; k < nv; ++k) {
            if (!((a * b).diff(k) == a.diff(k) * b + a * b.diff(k)))
                return fail(r, "Leibniz fails for " + a.str() + " and " + b.str());
            if (!((a + b).diff(k) == a.diff(k) + b.diff(k)))
                return fail(r, "additivity fails for " + a.str() + " and " + b.str());
        }
    }
    return r;
}

PropertyResult evaluation_homomorphism(std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int t = 0; t < 60; ++t, ++r.cases) {
        const int nv = 1 + t % 4;
        MultiPoly a = random_poly(rng, nv, 5, 4), b = random_poly(rng, nv, 5, 4);
        std::vector<Rational> pt;
        for (int v = 0; v < nv; ++v)
            pt.push_back(random_rational(rng, 7, 4));
        Rational ea = a.eval(pt), eb = b.eval(pt);
        if (!((a + b).eval(pt) == ea + eb) || !((a - b).eval(pt) == ea - eb) || !((a * b).eval(pt) == ea * eb))
            return fail(r, "evaluation does not commute with arithmetic for " + a.str() + " and " + b.str());
    }
    return r;
}

PropertyResult matrix_inverse_identity(std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int t = 0; t < 24; ++t) {
        const int n = 2 + t % 2;
        PolyMatrix m = zero_poly_matrix(z(n), z(n), n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(z(i), z(j)) = random_poly(rng, n, 2, 1, 4);
        if (poly_determinant(m).is_zero())
            continue;
        ++r.cases;
        auto inv = matrix_inverse(m);
        auto mm = m.map([](const MultiPoly& p) { return RationalFunction(p); });
        auto prod = mm * inv;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(prod(z(i), z(j)) == RationalFunction(MultiPoly(n, Rational(i == j ? 1 : 0)))))
                    return fail(r, "m * m^-1 differs from the identity at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ")");
    }
    return r;
}

PropertyResult obstruction_symmetry(std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    auto check = [&](const Bivector& g, const Bivector& h) {
        ObstructionTensor T = obstruction_tensor(g, h);
        const int n = g.n();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (!(T.T(i, j, k) == T.T(i, k, j)))
                        return false;
        return true;
    };
    // arbitrary h only at n = 2; the inverse of a random 3x3 linear h is too large
    Ring two(2);
    for (int t = 0; t < 6; ++t, ++r.cases) {
        Bivector g = Bivector::constant(two, random_constant_metric(rng, 2));
        Bivector h = random_linear_bivector(rng, two, 2);
        if (!check(g, h))
            return fail(r, "T^i_jk not symmetric for h = " + h.str());
    }
    for (const auto& p : random_pairs(3, 3, seed)) {
        ++r.cases;
        if (!check(p.g, p.h))
            return fail(r, "T^i_jk not symmetric for " + p.name);
    }
    return r;
}

PropertyResult killing_residual_symmetry(std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int t = 0; t < 20; ++t, ++r.cases) {
        Ring ring(2 + t % 3);
        const int n = ring.n;
        Bivector g = Bivector::constant(ring, random_constant_metric(rng, n));
        Bivector h = random_linear_bivector(rng, ring);
        auto K = killing_residual(g, h);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const auto& x = K(i, j, k);
                    if (!(x == K(j, i, k)) || !(x == K(i, k, j)) || !(x == K(k, j, i)))
                        return fail(r, "Killing residual not symmetric for h = " + h.str());
                }
    }
    return r;
}

PropertyResult nijenhuis_antisymmetry(std::uint64_t seed) {
    Rng rng(seed);
    PropertyResult r;
    for (int t = 0; t < 20; ++t, ++r.cases) {
        const int n = 2 + t % 3;
        PolyMatrix L = zero_poly_matrix(z(n), z(n), n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                L(z(i), z(j)) = random_poly(rng, n, 3, 2, 5);
        auto N = nijenhuis_torsion(L);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!(N(k, i, j) == -N(k, j, i)))
                        return fail(r, "torsion not antisymmetric at (" + std::to_string(k + 1) + "," +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
    return r;
}

PropertyResult t5_redundancy(std::uint64_t seed) {
    PropertyResult r;
    CheckOptions opts;
    opts.mode = CheckMode::Symbolic;
    for (const auto& p : pencil_corpus(seed)) {
        VerificationReport rep = mokhov_conditions(p.g, p.h, opts);
        bool first_four = true;
        for (const char* t : {"T1", "T2", "T3", "T4"})
            first_four = first_four && rep.passed(t);
        if (!first_four)
            continue;
        ++r.cases;
        if (!rep.passed("T5"))
            return fail(r, "T1-T4 hold but T5 fails for " + p.name);
    }
    return r;
}

PropertyResult exact_pencils(std::uint64_t seed) {
    PropertyResult r;
    for (const auto& p : pencil_corpus(seed)) {
        if (!killing_nijenhuis_conditions(p.g, p.h).verdict)
            continue;
        ++r.cases;
        if (!exactness_check(p.g, p.h))
            return fail(r, "pencil is not exact for " + p.name);
    }
    return r;
}

PropertyResult diagonal_eigenvalues_constant(std::uint64_t seed) {
    PropertyResult r;
    for (const auto& p : pencil_corpus(seed)) {
        if (!killing_nijenhuis_conditions(p.g, p.h).verdict)
            continue;
        const Ring& ring = p.g.ring();
        PolyMatrix L = affinor(p.g, p.h);
        SegreReport s;
        try {
            s = segre_type(L, ring);
        } catch (const UnsupportedEigenvalueField&) {
            continue;
        }
        bool diagonal = true;
        for (const auto& sample : s.samples)
            for (const auto& e : sample.eigen)
                for (int b : e.blocks)
                    diagonal = diagonal && b == 1;
        if (!diagonal)
            continue;
        ++r.cases;
        if (!s.fits)
            return fail(r, "eigenvalues of a diagonal affinor are not polynomial for " + p.name);
        for (const auto& f : *s.fits)
            if (f.re.degree_in_block(ring.n) > 0 || f.im.degree_in_block(ring.n) > 0)
                return fail(r, "non-constant eigenvalue " + f.str(ring) + " for " + p.name);
    }
    return r;
}

const std::vector<Property>& property_suite() {
    static const std::vector<Property> all = {
        {"field axioms", field_axioms},
        {"Leibniz rule", leibniz_rule},
        {"evaluation homomorphism", evaluation_homomorphism},
        {"matrix inverse identity", matrix_inverse_identity},
        {"obstruction tensor symmetry", obstruction_symmetry},
        {"Killing residual symmetry", killing_residual_symmetry},
        {"Nijenhuis antisymmetry", nijenhuis_antisymmetry},
        {"T5 redundancy", t5_redundancy},
        {"exact pencils", exact_pencils},
        {"diagonal affinor has constant eigenvalues", diagonal_eigenvalues_constant},
    };
    return all;
}

} // namespace hydro::testing
