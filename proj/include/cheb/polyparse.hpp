#pragma once

#include <string>

#include "cheb/poly.hpp"

namespace cheb {

// Integer polynomial in x: integers, x, + - * ^, parentheses; "3x^2" is read as 3*x^2.
// Throws ValidationError with the offending position.
BigPoly parse_poly_big(const std::string& s);
ZPoly parse_poly(const std::string& s);

}  // namespace cheb
