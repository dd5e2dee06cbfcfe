#pragma once

#include "veer/algebra/number_field.hpp"
#include "veer/moves/sequence.hpp"

#include <gmpxx.h>

namespace veer::bounds {

using algebra::AlgebraicNumber;
using algebra::RatInterval;

struct BoundReport {
  int genus = 0;
  int punctures = 0;
  int e = 0;  // branches
  int branch_bound = 0;  // 18g - 18 + 6n
  bool maximal = false;  // every region a trigon or punctured monogon (e equals the bound)
  int steps = 0;  // maximal splits per period
  int m = 0;  // individual splits per period, the m of 2m + 1 <= lambda^e
  AlgebraicNumber lambda;
  RatInterval margin;  // encloses lambda^e - (2m + 1)
  mpq_class psi_exponent;  // 2g - 2 + 2n/3
};

/// Checks 2m + 1 <= lambda^e exactly, every fold factor's entry sum e + 2,
/// and e <= 18g - 18 + 6n for the certified track. Throws BoundViolated.
BoundReport verify_inequality(const moves::RunResult& run);

/// lambda <= P^(1 / (2g - 2 + 2n/3)) in the integer form
/// lambda^(6g - 6 + 2n) <= P^3. Throws BadParameters unless the exponent is
/// positive and P > 1.
bool psi_membership(const AlgebraicNumber& lambda, int genus, int punctures, const AlgebraicNumber& p);

/// floor((P^9 - 1) / 2), the tetrahedron count bound for P. Throws
/// BadParameters unless P > 1.
mpz_class tetrahedra_bound(const AlgebraicNumber& p);

/// delta^(g - 1) <= 2 + sqrt 3, the hypothesis that puts the minimal genus g
/// dilatations into one Psi_P.
bool delta_hypothesis(const AlgebraicNumber& delta, int genus);

/// Order of two reals given in possibly different fields: exact when one is
/// rational or both share a field, interval refinement otherwise.
algebra::Ordering compare_reals(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// P = (2 + sqrt 3)^2 in Q(sqrt 3).
AlgebraicNumber two_plus_sqrt3_squared();

}  // namespace veer::bounds
