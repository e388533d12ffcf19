#pragma once

#include "lensskein/scalar/laurent_poly.hpp"

namespace lensskein::scalar::detail {

// Greatest common divisor of two Laurent polynomials, up to units.
// The result is a genuine polynomial (zero-minimal exponents) whose
// leading coefficient is positive; gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// a / b when b divides a in Z[q^+-1, z^+-1]; throws std::domain_error otherwise.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace lensskein::scalar::detail
