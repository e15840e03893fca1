#pragma once

#include "hydro/tensor/bivector.hpp"

namespace hydro {

/// mu^{(n;k)ij} = [3(i+j) - 2(n+2-k)] u^{i+j-1+k} with u^a = 0 for a > n.
/// Zero for k > n - 2.
Bivector mu_bivector(const Ring& ring, int k);
Bivector mu_bivector(int n, int k);

/// Constant part of the single Jordan block normal form: ones where
/// i + j = n and lambda where i + j = n + 1.
Bivector jordan_constant_part(const Ring& ring, const MultiPoly& lambda);

} // namespace hydro
