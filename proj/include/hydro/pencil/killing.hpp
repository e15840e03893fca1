#pragma once

#include "hydro/tensor/bivector.hpp"

#include <vector>

namespace hydro {

/// X^i as polynomials on the metric's ring.
using VectorField = std::vector<MultiPoly>;

struct KillingBasis {
    int n = 0;
    /// Affine isometries u -> A u with A g + g A^T = 0, followed by the translations.
    std::vector<VectorField> vectors;
};

/// Isometry algebra of a constant metric: n(n+1)/2 affine fields.
KillingBasis killing_vector_basis(const Bivector& g);

/// Degree <= 1 bivectors h with killing_residual(g, h) = 0, from the linear
/// system on the coefficients of h. Basis in reduced echelon order.
std::vector<Bivector> killing_bivector_space(const Bivector& g);

/// Symmetrized products X (.) Y of basis fields, truncated to degree <= 1.
std::vector<Bivector> killing_vector_products(const Bivector& g);

/// Coordinates of a degree <= 1 bivector with numeric coefficients, slot-major:
/// the u^1 coefficients of all h^{ij} (i <= j), then u^2, ..., u^n, then the constants.
std::vector<Rational> linear_coordinates(const Bivector& h);
Bivector from_linear_coordinates(const Ring& ring, const std::vector<Rational>& x);

} // namespace hydro
