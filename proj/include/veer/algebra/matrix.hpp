#pragma once

#include "veer/algebra/number_field.hpp"
#include "veer/algebra/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace veer::algebra {

/// Square matrix of nonnegative integers acting on weight coordinates
/// (row-major, y = M x).
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t n) : n_(n), a_(n * n, mpz_class(0)) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t dimension() const { return n_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  mpz_class entry_sum() const;
  bool all_positive() const;

  friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y);
  friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<mpz_class> a_;
};

/// det(xI - m), exact (Faddeev-LeVerrier with exact integer division).
IntPolynomial char_poly(const IntegerMatrix& m);

/// True if some power m^k with k <= (n-1)^2 + 1 is entrywise positive.
bool is_primitive(const IntegerMatrix& m);

struct PerronFrobenius {
  /// Irreducible factor of the characteristic polynomial carrying lambda.
  IntPolynomial minpoly;
  FieldPtr field;
  AlgebraicNumber lambda;
  /// Positive eigenvector normalized so its first coordinate is 1.
  std::vector<AlgebraicNumber> vector;
};

/// Irreducible factor of char_poly(m) whose largest real root is the largest
/// real eigenvalue, with an interval isolating that root.
struct SpectralFactor {
  IntPolynomial factor;
  RatInterval root;
};
SpectralFactor spectral_radius_factor(const IntegerMatrix& m);

/// True if `x` is the root of `s.factor` isolated by `s.root`.
bool is_spectral_root(const SpectralFactor& s, const AlgebraicNumber& x);

/// Perron-Frobenius eigenvalue and eigenvector of a primitive matrix.
/// Throws Error(NotPrimitive).
PerronFrobenius pf_eigenpair(const IntegerMatrix& m);

/// Largest real eigenvalue and a positive eigenvector (first coordinate 1)
/// without asking for primitivity. With `lambda` given, the eigenvalue is
/// taken in its field after checking it is the largest real root. Throws
/// NotPrimitive if the eigenspace is not a single positive ray.
PerronFrobenius dominant_eigenpair(const IntegerMatrix& m, const std::optional<AlgebraicNumber>& lambda = std::nullopt);

/// Right null vector of (m - lambda I) over the field of `lambda` with first
/// nonzero free coordinate 1; empty if the kernel is trivial.
std::vector<std::vector<AlgebraicNumber>> eigenspace(const IntegerMatrix& m, const AlgebraicNumber& lambda);

/// m * v over Q(lambda).
std::vector<AlgebraicNumber> multiply(const IntegerMatrix& m, const std::vector<AlgebraicNumber>& v);

}  // namespace veer::algebra
