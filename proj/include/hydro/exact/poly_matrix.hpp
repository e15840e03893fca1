#pragma once

#include "hydro/exact/matrix.hpp"
#include "hydro/exact/multipoly.hpp"
#include "hydro/exact/rational_function.hpp"

namespace hydro {

using PolyMatrix = Matrix<MultiPoly>;
using RationalMatrix = Matrix<Rational>;

PolyMatrix zero_poly_matrix(std::size_t rows, std::size_t cols, int nvars);

/// Determinant by Laplace expansion over column subsets (cheap on sparse input).
MultiPoly poly_determinant(const PolyMatrix& m);
/// Adjugate: m * adj(m) = det(m) * I.
PolyMatrix poly_adjugate(const PolyMatrix& m);

/// Inverse as adjugate over determinant with each entry gcd-normalized.
/// Throws IdenticallySingular when det(m) is the zero polynomial.
Matrix<RationalFunction> matrix_inverse(const PolyMatrix& m);

PolyMatrix to_poly_matrix(const RationalMatrix& m, int nvars);
RationalMatrix eval_matrix(const PolyMatrix& m, std::span<const Rational> point);

} // namespace hydro
