#pragma once

#include "veer/algebra/polynomial.hpp"

#include <vector>

namespace veer::algebra {

/// Distinct irreducible factors over the rationals of a nonzero integer
/// polynomial, each primitive with positive leading coefficient, sorted by
/// degree then coefficients. Constants are dropped.
///
/// Big-prime Zassenhaus: factor modulo a prime exceeding twice the
/// Landau-Mignotte coefficient bound (Cantor-Zassenhaus), then recombine
/// modular factors by trial division over the integers.
std::vector<IntPolynomial> irreducible_factors(const IntPolynomial& f);

bool is_irreducible(const IntPolynomial& f);

}  // namespace veer::algebra
