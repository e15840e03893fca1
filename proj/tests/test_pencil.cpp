#include "corpus.hpp"

#include "hydro/catalog/catalog.hpp"
#include "hydro/catalog/mu.hpp"
#include "hydro/errors.hpp"
#include "hydro/exact/linalg.hpp"
#include "hydro/pencil/families.hpp"
#include "hydro/pencil/killing.hpp"
#include "hydro/pencil/normalize.hpp"
#include "hydro/pencil/segre.hpp"
#include "hydro/tensor/geometry.hpp"
#include "hydro/tensor/verify.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace hydro;

namespace {

std::vector<std::vector<Rational>> coords(const std::vector<Bivector>& bs) {
    std::vector<std::vector<Rational>> out;
    for (const auto& b : bs)
        out.push_back(linear_coordinates(b));
    return out;
}

std::size_t width(int n) { return static_cast<std::size_t>((n + 1) * n * (n + 1) / 2); }

std::vector<Bivector> mu_span(int n) {
    std::vector<Bivector> out;
    for (int m = 0; m <= n - 2; ++m)
        out.push_back(mu_bivector(n, m));
    return out;
}

RationalMatrix jordan_block_sum(const std::vector<std::pair<Rational, int>>& blocks) {
    int n = 0;
    for (const auto& b : blocks)
        n += b.second;
    RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Rational(0));
    std::size_t at = 0;
    for (const auto& [ev, size] : blocks) {
        for (int i = 0; i < size; ++i) {
            m(at + static_cast<std::size_t>(i), at + static_cast<std::size_t>(i)) = ev;
            if (i + 1 < size)
                m(at + static_cast<std::size_t>(i), at + static_cast<std::size_t>(i + 1)) = Rational(1);
        }
        at += static_cast<std::size_t>(size);
    }
    return m;
}

/// exp(t Lie_X) applied to a bivector, summed until the series stops.
Bivector lie_series(const Bivector& b, const VectorField& X, const Rational& t) {
    Bivector total = b, term = b;
    for (int s = 1; s < 64; ++s) {
        term = lie_derivative_bivector(term, X) * (t / Rational(s));
        if (term.is_zero())
            return total;
        total += term;
    }
    throw std::runtime_error("Lie series did not terminate");
}

Bivector from_xi(int n, const std::vector<Rational>& xi) {
    JordanFamilyCoeffs c{n, xi, Rational(0)};
    return c.linear_part();
}

} // namespace

TEST(Killing, VectorBasisSize) {
    for (int n = 2; n <= 5; ++n) {
        Ring r(n);
        auto kb = killing_vector_basis(Bivector::constant(r, antidiagonal(n)));
        EXPECT_EQ(kb.vectors.size(), static_cast<std::size_t>(n * (n + 1) / 2)) << n;
        for (const auto& X : kb.vectors)
            EXPECT_TRUE(lie_derivative_bivector(Bivector::constant(r, antidiagonal(n)), X).is_zero());
    }
}

// Linear Killing bivectors of a flat metric are the degree <= 1 part of the
// span of symmetrized Killing vector products: two routes to the same space.
TEST(Killing, BivectorSpaceMatchesProducts) {
    for (int n = 2; n <= 4; ++n) {
        Ring r(n);
        for (const auto& g : {Bivector::constant(r, antidiagonal(n)),
                              Bivector::constant(r, identity_matrix<Rational>(static_cast<std::size_t>(n)))}) {
            auto direct = killing_bivector_space(g);
            auto products = killing_vector_products(g);
            EXPECT_TRUE(same_span(coords(direct), coords(products), width(n))) << n;
            for (const auto& h : direct) {
                auto K = killing_residual(g, h);
                for (std::size_t k = 0; k < K.size(); ++k)
                    EXPECT_TRUE(K.flat(k).is_zero());
            }
        }
    }
    // constants n(n+1)/2 plus linear part (n-1)n(n+1)/3
    EXPECT_EQ(killing_bivector_space(Bivector::constant(Ring(2), antidiagonal(2))).size(), 5u);
    EXPECT_EQ(killing_bivector_space(Bivector::constant(Ring(3), antidiagonal(3))).size(), 14u);
    EXPECT_EQ(killing_bivector_space(Bivector::constant(Ring(4), antidiagonal(4))).size(), 30u);
}

TEST(Killing, LinearCoordinatesRoundTrip) {
    Ring r(3);
    Bivector m = mokhov_operator(3).metrics[1];
    EXPECT_EQ(from_linear_coordinates(r, linear_coordinates(m)), m);
}

TEST(Families, JordanFamilyIsSpannedByMu) {
    for (int n = 2; n <= 7; ++n) {
        SolutionFamily f = solve_jordan_family(n);
        EXPECT_EQ(f.dimension, n - 1) << n;
        EXPECT_TRUE(same_span(coords(f.basis), coords(mu_span(n)), width(n))) << n;
    }
}

TEST(Families, NormalFormDimensions) {
    std::map<std::string, int> expected = {{"segre3", 2},       {"segre22-plus", 4}, {"segre22-minus", 4},
                                           {"segre31-plus", 4}, {"segre31-minus", 4}, {"segre4", 3},
                                           {"complex", 2}};
    ASSERT_EQ(pencil_normal_forms().size(), expected.size());
    for (const auto& nf : pencil_normal_forms()) {
        SolutionFamily f = solve_linear_conditions(nf.g, nf.g0);
        EXPECT_EQ(f.dimension, expected.at(nf.id)) << nf.id;
        EXPECT_EQ(f.zero_set_dimension, f.dimension) << nf.id;
        EXPECT_EQ(f.component_dimensions, std::vector<int>{f.dimension}) << nf.id;
        EXPECT_TRUE(f.quadratic_identity) << nf.id;
        EXPECT_EQ(static_cast<int>(nf.basis.size()), f.dimension) << nf.id;
        std::vector<std::vector<Rational>> a, b;
        for (const auto& x : f.basis)
            a.push_back(linear_coordinates(x));
        for (const auto& x : nf.basis)
            b.push_back(linear_coordinates(x));
        EXPECT_TRUE(same_span(a, b, width(nf.g.n()))) << nf.id;
    }
}

// g0 = 0 is a single eigenvalue of index one, so L must stay scalar.
TEST(Families, JordanTypeConstraint) {
    Ring r(3);
    RationalMatrix id(3, 3, Rational{}), e11(3, 3, Rational{});
    for (std::size_t i = 0; i < 3; ++i)
        id(i, i) = Rational(1);
    e11(0, 0) = Rational(1);
    SolutionFamily scalar = solve_linear_conditions(Bivector::constant(r, id), Bivector::constant(r, RationalMatrix(3, 3, Rational{})));
    EXPECT_EQ(scalar.linear_dimension, 0);
    // not nilpotent: only Killing and linear Nijenhuis; the quadratic zero
    // set is a curve with no rational line on it
    SolutionFamily f = solve_linear_conditions(Bivector::constant(r, id), Bivector::constant(r, e11));
    EXPECT_EQ(f.linear_dimension, 2);
    EXPECT_EQ(f.zero_set_dimension, 1);
    EXPECT_EQ(f.dimension, 0);
    EXPECT_FALSE(f.quadratic_identity);
}

TEST(Families, SolutionsPassBothCriteria) {
    for (int n = 3; n <= 5; ++n) {
        SolutionFamily f = solve_jordan_family(n);
        Bivector h = f.general();
        const Ring& r = h.ring();
        Bivector g = f.g.in_ring(r);
        auto kn = killing_nijenhuis_conditions(g, h);
        EXPECT_TRUE(kn.verdict) << n;
    }
}

TEST(Segre, ConstantJordanStructure) {
    EXPECT_EQ(segre_label(jordan_structure(jordan_block_sum({{Rational(2), 3}, {Rational(2), 1}}))), "[3,1]");
    EXPECT_EQ(segre_label(jordan_structure(jordan_block_sum({{Rational(0), 2}, {Rational(0), 2}}))), "[2,2]");
    EXPECT_EQ(segre_label(jordan_structure(jordan_block_sum({{Rational(1), 2}, {Rational(5), 1}}))), "[2 | 1]");
    EXPECT_EQ(segre_label(jordan_structure(jordan_block_sum({{Rational(1), 1}, {Rational(1), 1}, {Rational(2), 1}}))),
              "[1,1 | 1]");
    RationalMatrix rot(2, 2, Rational(0));
    rot(0, 1) = Rational(-1), rot(1, 0) = Rational(1);
    auto eig = jordan_structure(rot);
    ASSERT_EQ(eig.size(), 2u);
    EXPECT_EQ(eig[0].value * eig[0].value, GaussianRational(-1));
    RationalMatrix irr(2, 2, Rational(0));
    irr(0, 1) = Rational(2), irr(1, 0) = Rational(1);
    EXPECT_THROW(jordan_structure(irr), UnsupportedEigenvalueField);
}

TEST(Segre, ConjugationInvariance) {
    hydro::testing::Rng rng(31);
    std::vector<RationalMatrix> samples = {
        jordan_block_sum({{Rational(2), 3}, {Rational(2), 1}}),
        jordan_block_sum({{Rational(-1), 2}, {Rational(3), 2}}),
        jordan_block_sum({{Rational(1, 2), 4}}),
        jordan_block_sum({{Rational(0), 2}, {Rational(0), 1}, {Rational(4), 1}}),
    };
    for (const auto& m : samples) {
        std::string label = segre_label(jordan_structure(m));
        for (int t = 0; t < 5; ++t) {
            RationalMatrix a = hydro::testing::random_constant_metric(rng, static_cast<int>(m.rows()));
            RationalMatrix conj = a * m * inverse(a);
            EXPECT_EQ(segre_label(jordan_structure(conj)), label);
        }
    }
}

TEST(Segre, TwoComponentOperator) {
    const auto& e = catalog_entry("two-component");
    PolyMatrix L = affinor(e.spec.metrics[0], e.spec.metrics[1]);
    SegreReport s = segre_type(L, e.spec.ring);
    EXPECT_EQ(s.label, "[2]");
    EXPECT_TRUE(s.consistent);
    ASSERT_TRUE(s.fits.has_value());
    ASSERT_EQ(s.fits->size(), 1u);
    EXPECT_EQ((*s.fits)[0].str(e.spec.ring), "1/1*u2");
}

TEST(Segre, SamplePointsAreSeeded) {
    Ring r(3, {"lambda"});
    EXPECT_EQ(sample_points(r, 7, 5), sample_points(r, 7, 5));
    EXPECT_NE(sample_points(r, 7, 5), sample_points(r, 8, 5));
    EXPECT_EQ(sample_points(r, 7, 5)[0].size(), 4u);
}

TEST(Normalize, FlowWeights) {
    EXPECT_EQ(flow_weight(7, 2, 0), 0);
    EXPECT_EQ(flow_weight(5, 1, 0), -1);
    EXPECT_EQ(flow_weight(5, 1, 1), -3);
    EXPECT_EQ(flow_weight(4, 1, 0), 0);
}

// Isometry, single step and iterated step of the flow fields.
TEST(Normalize, LieDerivativeIdentities) {
    for (int n = 3; n <= 7; ++n) {
        Ring r(n);
        Bivector g = Bivector::constant(r, antidiagonal(n));
        for (int k = 1; k <= n - 2; ++k) {
            VectorField X = jordan_flow_field(r, k);
            EXPECT_TRUE(lie_derivative_bivector(g, X).is_zero()) << n << " " << k;
            for (int alpha = 0; alpha <= n - 2; ++alpha) {
                Bivector lhs = lie_derivative_bivector(mu_bivector(r, alpha), X);
                EXPECT_EQ(lhs, mu_bivector(r, alpha + k) * Rational(flow_weight(n, k, alpha)))
                    << n << " " << k << " " << alpha;
                Bivector iter = mu_bivector(r, alpha);
                Rational coeff(1);
                for (int m = 1; alpha + m * k <= n; ++m) {
                    iter = lie_derivative_bivector(iter, X);
                    coeff *= Rational(flow_weight(n, k, alpha) - 2 * k * (m - 1));
                    EXPECT_EQ(iter, mu_bivector(r, alpha + m * k) * coeff) << n << " " << k << " " << alpha << " " << m;
                }
            }
        }
    }
}

TEST(Normalize, ApplyFlowMatchesLieSeries) {
    hydro::testing::Rng rng(5);
    for (int n = 4; n <= 7; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            std::vector<Rational> xi;
            for (int m = 0; m <= n - 2; ++m)
                xi.push_back(hydro::testing::random_rational(rng));
            Rational t = hydro::testing::random_rational(rng);
            Bivector expected = lie_series(from_xi(n, xi), jordan_flow_field(Ring(n), k), t);
            EXPECT_EQ(from_xi(n, apply_flow(n, k, t, xi)), expected) << n << " " << k;
        }
}

// v^i = gamma^{(n+1)/2 - i} u^i with gamma = s^2, applied to mu^{(n;k)} by hand.
TEST(Normalize, ScalingIdentity) {
    for (int n = 2; n <= 7; ++n) {
        Ring r(n);
        // s is the positive root of gamma
        for (Rational s : {Rational(2), Rational(1, 3), Rational(5, 2)}) {
            for (int k = 0; k <= n - 2; ++k) {
                Bivector mu = mu_bivector(r, k);
                auto m = zero_poly_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n), n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        MultiPoly p = mu(i, j);
                        for (int a = 1; a <= n; ++a)
                            p = p.substitute(a - 1, r.u(a) * s.pow(2 * a - n - 1));
                        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                            p * s.pow(n + 1 - 2 * (i + 1)) * s.pow(n + 1 - 2 * (j + 1));
                    }
                EXPECT_EQ(Bivector(r, m), mu * scaling_action(n, k, s * s)) << n << " " << k;
            }
        }
    }
    EXPECT_THROW(scaling_action(4, 0, Rational(2)), NonSquareGamma);
    EXPECT_EQ(scaling_action(3, 1, Rational(2)), Rational(4));
}

TEST(Normalize, GenericCoefficients) {
    hydro::testing::Rng rng(11);
    for (int n : {5, 6, 7}) {
        std::vector<Rational> xi{Rational(1)};
        for (int m = 1; m <= n - 2; ++m)
            xi.push_back(hydro::testing::random_rational(rng));
        NormalizedFamily f = lie_flow_normalize({n, xi, Rational(0)});
        for (int m = 1; m <= n - 2; ++m) {
            if (n != 7 || m != 2) {
                EXPECT_TRUE(f.coeffs.xi[static_cast<std::size_t>(m)].is_zero()) << n << " " << m;
            }
        }
        EXPECT_EQ(f.moduli, n == 7 ? std::vector<int>{2} : std::vector<int>{});
    }
}

TEST(Normalize, FrozenSevenComponentModulus) {
    std::vector<Rational> xi = {Rational(1), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)};
    NormalizedFamily f = lie_flow_normalize({7, xi, Rational(0)});
    // t1 = -xi1 / p[7,1,0] = 1/3; the mu^{(7;2)} coefficient becomes
    // t1 p[7,1,1] + t1^2 / 2 * p[7,1,0] (p[7,1,0] - 2) = -5/3 + 5/6
    EXPECT_EQ(f.coeffs.xi[2], Rational(-5, 6));
    ASSERT_FALSE(f.transcript.empty());
    EXPECT_EQ(f.transcript[0].t, Rational(1, 3));
    EXPECT_TRUE(f.transcript[1].skipped);
}

TEST(Normalize, ConstantEigenvalueBranches) {
    // n = 5, alpha = 1: p[5,k,1] = 3k - 6 vanishes at k = 2, modulus at 3
    NormalizedFamily a = lie_flow_normalize_constant_eig({5, {0, 1, Rational(2), Rational(3)}, Rational(1)});
    EXPECT_EQ(a.alpha, 1);
    EXPECT_EQ(a.moduli, std::vector<int>{3});
    EXPECT_TRUE(a.coeffs.xi[2].is_zero());
    // n = 5, alpha = 2: p[5,1,2] = -5, no modulus
    NormalizedFamily b = lie_flow_normalize_constant_eig({5, {0, 0, 1, Rational(7)}, Rational(0)});
    EXPECT_TRUE(b.moduli.empty());
    EXPECT_TRUE(b.coeffs.xi[3].is_zero());
}

TEST(Normalize, Errors) {
    EXPECT_THROW(lie_flow_normalize({5, {2, 0, 0, 0}, Rational(0)}), ScalingNotNormalized);
    EXPECT_THROW(lie_flow_normalize_constant_eig({5, {0, 3, 0, 0}, Rational(0)}), ScalingNotNormalized);
    EXPECT_THROW(lie_flow_normalize_constant_eig({5, {0, 0, 0, 0}, Rational(0)}), ScalingNotNormalized);
}
