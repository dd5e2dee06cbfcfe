#pragma once

#include "veer/algebra/polynomial.hpp"

#include <vector>

namespace veer::algebra {

/// Sturm chain p, p', -rem(p, p'), ... for a square-free polynomial.
std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p);

/// Number of distinct real roots in the half-open interval (a, b].
int count_roots(const std::vector<RatPolynomial>& sturm, const mpq_class& a, const mpq_class& b);

/// Cauchy bound: every real root has absolute value below the result.
mpq_class root_bound(const RatPolynomial& p);

/// Isolating intervals for all real roots of a square-free polynomial, in
/// increasing order. Each interval either is degenerate (a rational root) or
/// has endpoints where p takes opposite nonzero signs.
std::vector<RatInterval> isolate_real_roots(const IntPolynomial& p);

/// Bisect an isolating interval until its width is at most `width`.
RatInterval refine_root(const RatPolynomial& p, RatInterval iv, const mpq_class& width);

/// One bisection step of an isolating interval.
RatInterval bisect_root(const RatPolynomial& p, const RatInterval& iv);

}  // namespace veer::algebra
