#pragma once

#include "hydro/exact/multipoly.hpp"

#include <vector>

namespace hydro {

/// Reduced Groebner basis in the graded-lex order of MultiPoly, monic,
/// sorted by leading monomial. Zero inputs are dropped.
std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens);

/// Fully reduced remainder of f by a Groebner basis.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);

/// Dimension of the affine zero set over C of the ideal with Groebner basis
/// `basis` in `nvars` variables: the size of a largest variable set carrying
/// no leading monomial. -1 for the unit ideal.
int zero_set_dimension(const std::vector<MultiPoly>& basis, int nvars);

} // namespace hydro
