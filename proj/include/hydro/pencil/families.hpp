#pragma once

#include "hydro/exact/gaussian.hpp"
#include "hydro/tensor/bivector.hpp"

#include <vector>

namespace hydro {

/// g~ = g0 + sum kappa_i basis_i for arbitrary constants kappa_i.
struct SolutionFamily {
    Bivector g;
    Bivector g0;
    std::vector<Bivector> basis; ///< homogeneous linear, rational coefficients
    int dimension = 0;
    /// Dimension of the linear solution space before the quadratic filter.
    int linear_dimension = 0;
    /// Basis of the linear solution space before the quadratic filter.
    std::vector<Bivector> linear_basis;
    /// Dimensions of the maximal linear pieces of the quadratic Nijenhuis
    /// zero set inside the linear solution space, largest first. basis spans
    /// the first one.
    std::vector<int> component_dimensions;
    /// Dimension of that zero set, from a Groebner basis; -1 when the linear
    /// space is too large to compute it. Equal to dimension exactly when the
    /// basis spans a top-dimensional component.
    int zero_set_dimension = -1;
    /// The quadratic Nijenhuis terms vanish on the whole linear solution space.
    bool quadratic_identity = true;

    /// Ring of g with parameters kappa1..kappaD appended.
    Ring kappa_ring() const;
    /// The general member on kappa_ring().
    Bivector general() const;
};

/// Linear part of g~ for a constant pair (g, g0) in normal form: Killing
/// equations plus the u-independent part of the Nijenhuis torsion, imposed
/// identically in the parameters of g0. When g0 g^{-1} has a single
/// eigenvalue, the first-order part of (L - tr(L)/n)^s = 0 is added, s being
/// the nilpotency index at g0, so the Jordan type of g0 is kept. The result
/// is then restricted to the largest
/// linear piece of the zero set of the quadratic part. g must have rational
/// entries.
SolutionFamily solve_linear_conditions(const Bivector& g, const Bivector& g0);

/// The single Jordan block system written on the coefficients c^i_{jk} of
/// L = c u + g0 g^{-1}, with g antidiagonal and g0 = jordan_constant_part.
/// The ring carries the parameter "lambda".
SolutionFamily solve_jordan_family(int n);

/// Complex-linear bivector in z^k = u^{2k-1} + i u^{2k}:
/// entry(i, j) = coeffs(i, j)[0] + sum_k coeffs(i, j)[k] z^k.
struct ComplexBivector {
    int m = 0;
    std::vector<std::vector<std::vector<GaussianRational>>> coeffs;
    static ComplexBivector zero(int m);
    GaussianRational& at(int i, int j, int k) { return coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]; }
};

/// Each complex entry a + ib becomes the real block [[-b, a], [a, b]].
Bivector complexify(const ComplexBivector& h);
OperatorSpec complexify(const ComplexBivector& g, const ComplexBivector& h);

} // namespace hydro
