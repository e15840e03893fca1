#pragma once

#include "hydro/exact/gaussian.hpp"
#include "hydro/exact/matrix.hpp"
#include "hydro/exact/multipoly.hpp"

#include <utility>
#include <vector>

namespace hydro {

/// Dense univariate polynomial, coefficient k multiplies x^k.
using UPoly = std::vector<Rational>;

struct RootResult {
    std::vector<std::pair<Rational, int>> rational;         // ascending
    std::vector<std::pair<GaussianRational, int>> gaussian; // non-real, conjugates both listed
    UPoly residual;                                         // factor with no roots in Q(i), monic
};

/// Roots of p in Q, then roots in Q(i) \ Q, with multiplicities. Candidate
/// roots come from a floating-point solve of the square-free part and are only
/// accepted after exact verification.
RootResult rational_roots(const UPoly& p);
/// Same for a MultiPoly that depends on at most one variable.
RootResult rational_roots(const MultiPoly& p);

/// det(x I - m) via Faddeev-LeVerrier.
UPoly char_poly(const Matrix<Rational>& m);

void upoly_trim(UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
/// Quotient and remainder of a by b (b nonzero).
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly upoly_derivative(const UPoly& p);

} // namespace hydro
