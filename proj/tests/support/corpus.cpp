#include "corpus.hpp"

#include "hydro/catalog/catalog.hpp"
#include "hydro/exact/linalg.hpp"
#include "hydro/exact/parse.hpp"
#include "hydro/pencil/families.hpp"

namespace hydro::testing {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// All parameters replaced by the given values; the result lives on Ring(n).
Bivector specialize(const Bivector& b, const std::vector<Rational>& values) {
    const Ring& ring = b.ring();
    Ring plain(ring.n);
    auto m = zero_poly_matrix(z(ring.n), z(ring.n), ring.n);
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j) {
            MultiPoly p = b(i, j);
            for (std::size_t a = 0; a < values.size(); ++a)
                p = p.substitute(ring.n + static_cast<int>(a), values[a]);
            MultiPoly q(ring.n);
            for (const auto& t : p.terms()) {
                Monomial mono;
                for (int v = 0; v < ring.n; ++v)
                    mono.e[z(v)] = t.m.e[z(v)];
                mono.deg = t.m.deg;
                q += MultiPoly::monomial(ring.n, mono, t.c);
            }
            m(z(i), z(j)) = q;
        }
    return Bivector(plain, std::move(m));
}

/// The pair in coordinates v with u = A v; h must have degree <= 1.
CorpusPair transform(const CorpusPair& p, const RationalMatrix& A) {
    const Ring& ring = p.g.ring();
    const int n = ring.n;
    RationalMatrix B = inverse(A);
    auto pull = [&](const Bivector& h) {
        // h(Av): u^m -> sum_q A(m, q) v^q
        auto hv = zero_poly_matrix(z(n), z(n), ring.nvars());
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                MultiPoly e = h(k, l).homogeneous_part(n, 0);
                for (int m = 0; m < n; ++m) {
                    MultiPoly c = h(k, l).coefficient(m, 1).homogeneous_part(n, 0);
                    if (c.is_zero())
                        continue;
                    for (int q = 0; q < n; ++q)
                        if (!A(z(m), z(q)).is_zero())
                            e += c * ring.u(q + 1) * A(z(m), z(q));
                }
                hv(z(k), z(l)) = e;
            }
        auto out = zero_poly_matrix(z(n), z(n), ring.nvars());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        Rational c = B(z(i), z(k)) * B(z(j), z(l));
                        if (!c.is_zero() && !hv(z(k), z(l)).is_zero())
                            out(z(i), z(j)) += hv(z(k), z(l)) * c;
                    }
        return Bivector(ring, std::move(out));
    };
    return {p.name, pull(p.g), pull(p.h)};
}

RationalMatrix random_invertible(Rng& rng, int n) {
    for (;;) {
        RationalMatrix A(z(n), z(n), Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                A(z(i), z(j)) = Rational(uniform(rng, -2, 2));
        if (!determinant(A).is_zero())
            return A;
    }
}

CorpusPair family_member(Rng& rng, const SolutionFamily& fam, const std::string& name) {
    Bivector h = fam.general();
    std::vector<Rational> values;
    for (std::size_t a = 0; a < h.ring().params.size(); ++a)
        values.push_back(random_rational(rng, 4, 3));
    Bivector hs = specialize(h, values);
    Bivector gs = specialize(fam.g, std::vector<Rational>(fam.g.ring().params.size(), Rational(0)));
    return {name, gs, hs};
}

} // namespace

Rational random_rational(Rng& rng, long range, long max_den) {
    return Rational(mpz_class(uniform(rng, -range, range)), mpz_class(uniform(rng, 1, max_den)));
}

MultiPoly random_poly(Rng& rng, int nvars, int terms, int max_deg, long range) {
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int budget = static_cast<int>(uniform(rng, 0, max_deg));
        for (int d = 0; d < budget; ++d) {
            int v = static_cast<int>(uniform(rng, 0, nvars - 1));
            ++m.e[z(v)];
            ++m.deg;
        }
        p += MultiPoly::monomial(nvars, m, random_rational(rng, range, 4));
    }
    return p;
}

Bivector random_linear_bivector(Rng& rng, const Ring& ring, long range) {
    const int n = ring.n;
    for (;;) {
        auto m = zero_poly_matrix(z(n), z(n), ring.nvars());
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                MultiPoly e = ring.constant(Rational(uniform(rng, -range, range)));
                for (int k = 1; k <= n; ++k)
                    if (uniform(rng, 0, 2) > 0)
                        e += ring.u(k) * Rational(uniform(rng, -range, range));
                m(z(i), z(j)) = e;
                m(z(j), z(i)) = e;
            }
        Bivector b(ring, std::move(m));
        if (!b.determinant().is_zero())
            return b;
    }
}

RationalMatrix random_constant_metric(Rng& rng, int n, long range) {
    for (;;) {
        RationalMatrix m(z(n), z(n), Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                m(z(i), z(j)) = m(z(j), z(i)) = Rational(uniform(rng, -range, range));
        if (!determinant(m).is_zero())
            return m;
    }
}

Bivector bivector(const Ring& ring, const std::vector<std::vector<std::string>>& rows) {
    auto names = ring.names();
    auto m = zero_poly_matrix(rows.size(), rows.size(), ring.nvars());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m(i, j) = parse_polynomial(rows[i][j], names);
    return Bivector(ring, std::move(m));
}

std::vector<NegativeControl> negative_controls() {
    Ring r2(2), r3(3);
    Bivector a2 = Bivector::constant(r2, antidiagonal(2));
    Bivector a3 = Bivector::constant(r3, antidiagonal(3));
    Bivector e2 = bivector(r2, {{"1", "0"}, {"0", "1"}});
    Bivector e3 = bivector(r3, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
    std::vector<NegativeControl> out;
    // Killing only: L stays torsion free
    out.push_back({"two-component with g~11 = -3u1", "killing", a2, bivector(r2, {{"-3*u1", "u2"}, {"u2", "0"}})});
    out.push_back({"Euclidean plane, diagonal coordinates", "killing", e2, bivector(r2, {{"u1", "0"}, {"0", "u2"}})});
    out.push_back({"Euclidean space, partly diagonal", "killing", e3,
                   bivector(r3, {{"u1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "u3"}})});
    // Nijenhuis only: Killing bivectors of the antidiagonal metric
    out.push_back({"rotation product plus constant", "nijenhuis", a3,
                   bivector(r3, {{"0", "-u1", "u2 + 1"}, {"-u1", "1", "0"}, {"u2 + 1", "0", "0"}})});
    out.push_back({"second rotation product plus constant", "nijenhuis", a3,
                   bivector(r3, {{"0", "-1/2*u2", "1"}, {"-1/2*u2", "u3 + 1", "0"}, {"1", "0", "0"}})});
    out.push_back({"sum of two rotation products plus constant", "nijenhuis", a3,
                   bivector(r3, {{"-2*u1", "0", "u3 - 1/2*u1 + 1"}, {"0", "1", "0"}, {"u3 - 1/2*u1 + 1", "0", "u3"}})});
    // linearity: quadratic second metrics
    out.push_back({"antidiagonal plus (u1)^2", "linearity", a2, bivector(r2, {{"u1^2", "1"}, {"1", "0"}})});
    out.push_back({"identity plus square of the rotation field", "linearity", e2,
                   bivector(r2, {{"1 + u2^2", "-u1*u2"}, {"-u1*u2", "1 + u1^2"}})});
    out.push_back({"three-component Mokhov metric plus (u3)^2", "linearity", a3,
                   bivector(r3, {{"-4*u1 + u3^2", "-u2", "2*u3"}, {"-u2", "2*u3", "0"}, {"2*u3", "0", "0"}})});
    return out;
}

std::vector<CorpusPair> random_pairs(int n, int count, std::uint64_t seed) {
    Rng rng(seed);
    SolutionFamily jordan = solve_jordan_family(n);
    std::vector<SolutionFamily> others;
    if (n == 3)
        for (const auto& nf : pencil_normal_forms())
            if (nf.g.n() == 3)
                others.push_back(solve_linear_conditions(nf.g, nf.g0));
    Ring ring(n);
    Bivector diag_g = Bivector::constant(ring, identity_matrix<Rational>(z(n)));
    RationalMatrix d0(z(n), z(n), Rational(0));
    for (int i = 0; i < n; ++i)
        d0(z(i), z(i)) = Rational(i + 1);
    others.push_back(solve_linear_conditions(diag_g, Bivector::constant(ring, d0)));

    std::vector<CorpusPair> out;
    for (int c = 0; c < count; ++c) {
        const std::string tag = "n" + std::to_string(n) + "-" + std::to_string(c);
        CorpusPair p;
        switch (c % 5) {
        case 0:
        case 1:
            p = family_member(rng, jordan, "jordan-member-" + tag);
            break;
        case 2:
            p = family_member(rng, others[z(c / 5) % others.size()], "family-member-" + tag);
            break;
        case 3: {
            p = family_member(rng, jordan, "perturbed-member-" + tag);
            int i = static_cast<int>(uniform(rng, 1, n)), j = static_cast<int>(uniform(rng, 1, n));
            int k = static_cast<int>(uniform(rng, 1, n));
            MultiPoly bump = ring.u(k) * Rational(uniform(rng, 1, 2));
            auto m = p.h.matrix();
            m(z(i - 1), z(j - 1)) += bump;
            if (i != j)
                m(z(j - 1), z(i - 1)) += bump;
            p.h = Bivector(ring, std::move(m));
            if (p.h.determinant().is_zero())
                p.h = random_linear_bivector(rng, ring);
            break;
        }
        default:
            p = {"random-" + tag, Bivector::constant(ring, random_constant_metric(rng, n)),
                 random_linear_bivector(rng, ring)};
            break;
        }
        if (c % 5 != 4)
            p = transform(p, random_invertible(rng, n));
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace hydro::testing
