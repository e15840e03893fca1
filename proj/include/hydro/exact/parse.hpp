#pragma once

#include "hydro/exact/multipoly.hpp"

#include <span>
#include <string>
#include <string_view>

namespace hydro {

/// Reads polynomials written with + - * / ^ and parentheses over the given
/// variable names, e.g. "3/2*u1^2 - lambda*(u2 + 1)". Division is only by
/// nonzero constants. The output of MultiPoly::str(names) parses back to the
/// same polynomial. Throws ParseError.
MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> names);

} // namespace hydro
