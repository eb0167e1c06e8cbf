#pragma once

#include "rsharp/bivar_poly.hpp"

#include <string_view>

namespace rsharp {

// Grammar: integers, a/b literals, z1|z2 (aliases x|y, t1|t2), + - * ^, unary minus, parentheses.
// '^' binds tightest and is right-associative; there is no implicit multiplication.
// Throws ParseError (SyntaxError, UnknownVariable, NegativeExponent) or DegreeCapExceeded.
BivarPoly parse_polynomial(std::string_view text);

}  // namespace rsharp
