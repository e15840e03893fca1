#pragma once

#include "hydro/pencil/killing.hpp"
#include "hydro/tensor/bivector.hpp"

#include <vector>

namespace hydro {

/// g~ = g0 + sum_m xi[m] mu^{(n;m)}, m = 0..n-2, with g0 = jordan_constant_part(lambda).
struct JordanFamilyCoeffs {
    int n = 0;
    std::vector<Rational> xi;
    Rational lambda;

    Bivector bivector() const;
    /// Without the constant part.
    Bivector linear_part() const;
};

/// X_(k) = sum_{i=1}^{n-k} (n-k+1-2i) u^{i+k} d_i.
VectorField jordan_flow_field(const Ring& ring, int k);

/// p_[n,k,alpha] = 3k + 1 - n - 2 alpha, so that Lie_{X_(k)} mu^{(n;alpha)} = p mu^{(n;alpha+k)}.
long flow_weight(int n, int k, int alpha);

/// exp(t Lie_{X_(k)}) on the coefficient vector; the series terminates.
std::vector<Rational> apply_flow(int n, int k, const Rational& t, const std::vector<Rational>& xi);

struct FlowStep {
    int k = 0;
    Rational t;
    bool skipped = false; ///< the weight vanishes, the coefficient is a modulus
};

struct NormalizedFamily {
    JordanFamilyCoeffs coeffs;
    int alpha = 0;                ///< index of the leading coefficient
    std::vector<FlowStep> transcript;
    /// Indices m with a surviving free coefficient besides alpha.
    std::vector<int> moduli;
};

/// Requires xi[0] = 1 (ScalingNotNormalized otherwise). Flows k = 1..n-2 in
/// order, each clearing the coefficient of mu^{(n;k)} when its weight is nonzero.
NormalizedFamily lie_flow_normalize(const JordanFamilyCoeffs& c);

/// Same with leading coefficient xi[alpha] = 1 and all earlier ones zero.
NormalizedFamily lie_flow_normalize_constant_eig(const JordanFamilyCoeffs& c);

/// gamma^{(n-1)/2 + k}; for even n gamma must be the square of a rational
/// (NonSquareGamma otherwise).
Rational scaling_action(int n, int k, const Rational& gamma);

} // namespace hydro
