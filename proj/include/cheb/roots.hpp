#pragma once

#include <complex>
#include <vector>

#include "cheb/poly.hpp"

namespace cheb {

using cld = std::complex<long double>;

// All complex roots of a square-free polynomial (coefficients low to high) by
// Aberth-Ehrlich simultaneous iteration followed by Newton polishing.
// Throws ConstructionError when the residual check fails.
std::vector<cld> poly_roots(const std::vector<long double>& coeffs);
std::vector<cld> poly_roots(const ZPoly& f);
std::vector<cld> poly_roots(const BigPoly& f);

// |lead| * prod max(1, |root|).
long double mahler_measure(const BigPoly& f);

// Number of real roots, using the discriminant sign as a parity cross-check.
int real_root_count(const ZPoly& f);

}  // namespace cheb
