#include "hydro/catalog/mu.hpp"
#include "hydro/errors.hpp"
#include "hydro/exact/parse.hpp"
#include "hydro/frobenius/frobenius.hpp"
#include "hydro/tensor/geometry.hpp"
#include "hydro/tensor/verify.hpp"

#include <gtest/gtest.h>

using namespace hydro;

namespace {

Tensor<MultiPoly> as_tensor(const Bivector& b) {
    const int n = b.n();
    Tensor<MultiPoly> t(n, 2, b.ring().zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t(i, j) = b(i, j);
    return t;
}

} // namespace

TEST(Frobenius, ConstructionForThreeComponents) {
    FrobeniusData f = build_cp_frobenius(3);
    EXPECT_EQ(f.g, antidiagonal(3));
    // c^i_{jk} = 1 iff j + k - i = 3 (1-based)
    EXPECT_EQ(f.c(0, 0, 2), Rational(1));
    EXPECT_EQ(f.c(1, 1, 2), Rational(1));
    EXPECT_EQ(f.c(0, 1, 1), Rational(1));
    EXPECT_TRUE(f.c(0, 0, 0).is_zero());
    EXPECT_EQ(f.e, (std::vector<Rational>{0, 0, 1}));
    Ring r(3);
    // E^k = (3k - 7) u^k
    EXPECT_EQ(f.E[0], r.u(1) * Rational(-4));
    EXPECT_EQ(f.E[2], r.u(3) * Rational(2));
    EXPECT_THROW(build_cp_frobenius(1), OutOfRange);
}

TEST(Frobenius, AxiomsHold) {
    for (int n = 2; n <= 6; ++n) {
        FrobeniusReport rep = check_frobenius_axioms(build_cp_frobenius(n));
        EXPECT_TRUE(rep.passed()) << n;
        for (const auto& a : rep.axioms)
            EXPECT_TRUE(a.passed) << n << " " << a.name << " " << a.witness;
    }
}

TEST(Frobenius, EulerScalings) {
    for (int n = 2; n <= 6; ++n) {
        FrobeniusReport rep = check_frobenius_axioms(build_cp_frobenius(n));
        ASSERT_TRUE(rep.unity_scaling && rep.product_scaling && rep.metric_scaling);
        EXPECT_EQ(*rep.unity_scaling, Rational(1 - n));
        EXPECT_EQ(*rep.product_scaling, Rational(n - 1));
        EXPECT_EQ(*rep.metric_scaling, Rational(1 - n));
    }
}

TEST(Frobenius, PotentialThirdDerivatives) {
    for (int n = 2; n <= 5; ++n) {
        FrobeniusData f = build_cp_frobenius(n);
        MultiPoly F = f.potential();
        Tensor<Rational> low = f.lowered();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    MultiPoly d = F.diff(i).diff(j).diff(k);
                    EXPECT_EQ(d, MultiPoly(n, low(i, j, k))) << n;
                }
    }
}

TEST(Frobenius, BrokenStructureIsDetected) {
    FrobeniusData f = build_cp_frobenius(4);
    f.c(0, 1, 1) = Rational(2);
    FrobeniusReport rep = check_frobenius_axioms(f);
    EXPECT_FALSE(rep.passed());
    EXPECT_FALSE(rep.axiom("associativity").passed);
    EXPECT_FALSE(rep.axiom("associativity").witness.empty());

    FrobeniusData g = build_cp_frobenius(3);
    g.c(0, 0, 1) = Rational(1);
    EXPECT_FALSE(check_frobenius_axioms(g).axiom("commutativity").passed);
}

// The generic tensor Lie derivative against the bivector formula.
TEST(Frobenius, LieDerivativeOracle) {
    Ring r(3);
    auto names = r.names();
    VectorField X = {parse_polynomial("u2^2 + u3", names), parse_polynomial("-u1*u3", names),
                     parse_polynomial("2*u1 - 1", names)};
    for (const auto& b : {mu_bivector(3, 0), mu_bivector(3, 1), Bivector::constant(r, antidiagonal(3))}) {
        Tensor<MultiPoly> got = lie_derivative(as_tensor(b), 2, X);
        Bivector want = lie_derivative_bivector(b, X);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                EXPECT_EQ(got(i, j), want(i, j));
    }
    // covector: (Lie_X w)_i = X^s d_s w_i + w_s d_i X^s
    Tensor<MultiPoly> w(3, 1, r.zero());
    w(0) = r.u(2);
    Tensor<MultiPoly> lw = lie_derivative(w, 0, X);
    EXPECT_EQ(lw(0), X[1]);
    EXPECT_EQ(lw(1), r.u(2) * r.u(2) * Rational(2));
    EXPECT_EQ(lw(2), r.u(2));
}

TEST(Frobenius, IntersectionFormIsMokhovMetric) {
    for (int n = 2; n <= 6; ++n) {
        FrobeniusData f = build_cp_frobenius(n);
        Bivector form = intersection_form(f);
        EXPECT_EQ(form, mu_bivector(n, 0)) << n;
        Ring r(n);
        OperatorSpec pencil(r, {LinearMetric(Bivector::constant(r, antidiagonal(n))), LinearMetric(form)});
        CheckOptions o;
        o.mode = CheckMode::Symbolic;
        EXPECT_TRUE(verify_operator(pencil, o).verdict) << n;
    }
}

TEST(Frobenius, CohomologyRing) {
    Tensor<Rational> h = cohomology_ring_constants(3);
    // H^2 x H^2 -> H^4: c^3_{22} = 1
    EXPECT_EQ(h(2, 1, 1), Rational(1));
    EXPECT_EQ(h(1, 0, 1), Rational(1));
    EXPECT_TRUE(h(2, 2, 2).is_zero());
    for (int n = 2; n <= 6; ++n)
        EXPECT_TRUE(cohomology_ring_correspondence(n)) << n;
}
