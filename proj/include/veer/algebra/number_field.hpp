#pragma once

#include "veer/algebra/polynomial.hpp"

#include <compare>
#include <memory>
#include <string>

namespace veer::algebra {

/// Q(lambda) for a real algebraic number lambda, described by its minimal
/// polynomial and a rational interval isolating the designated real root.
/// Immutable and shared by reference between elements.
class NumberField {
 public:
  /// Validates that `minpoly` is irreducible and that `interval` contains
  /// exactly one of its real roots.
  static std::shared_ptr<const NumberField> make(const IntPolynomial& minpoly, const RatInterval& interval);
  /// The field generated by the largest real root of an irreducible polynomial.
  static std::shared_ptr<const NumberField> largest_root(const IntPolynomial& minpoly);
  /// Q itself, presented as the root 0 of x.
  static std::shared_ptr<const NumberField> rationals();

  const IntPolynomial& minpoly() const { return minpoly_; }
  const RatPolynomial& minpoly_rational() const { return minpoly_q_; }
  int degree() const { return minpoly_.degree(); }
  /// The isolating interval as supplied (used for serialization).
  const RatInterval& interval() const { return interval_; }
  /// Index of the designated root among the real roots, ascending.
  int root_index() const { return root_index_; }
  /// Isolating interval refined to width at most `width`.
  RatInterval root_interval(const mpq_class& width) const;
  /// Cached tight interval (width <= 2^-64 or exact).
  const RatInterval& tight_interval() const { return tight_; }

  bool same_as(const NumberField& other) const {
    return this == &other || (minpoly_ == other.minpoly_ && root_index_ == other.root_index_);
  }

  /// "c0 c1 ... cd ; lo hi" with exact rationals.
  std::string descriptor_string() const;

 private:
  NumberField() = default;

  IntPolynomial minpoly_;
  RatPolynomial minpoly_q_;
  RatInterval interval_;
  RatInterval tight_;
  int root_index_ = 0;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Exact element of Q(lambda), stored as a rational polynomial in lambda of
/// degree below the field degree.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(NumberField::rationals(), mpq_class(0)) {}
  AlgebraicNumber(FieldPtr field, const mpq_class& value);
  AlgebraicNumber(FieldPtr field, RatPolynomial rep);

  static AlgebraicNumber generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const RatPolynomial& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  mpq_class rational_value() const { return rep_.is_zero() ? mpq_class(0) : rep_.coeffs()[0]; }

  /// -1, 0 or 1, decided exactly.
  int sign() const;

  AlgebraicNumber inverse() const;
  AlgebraicNumber pow(unsigned exponent) const;

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const mpq_class& s, const AlgebraicNumber& a);

  /// Same field and identical reduced representation.
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

  /// Coefficients of the lambda-polynomial, "c0 c1 ..." as exact rationals.
  std::string to_string() const;
  /// Decimal rendering with `digits` fractional digits (truncated midpoint).
  std::string to_decimal(int digits = 10) const;
  double to_double() const;

 private:
  FieldPtr field_;
  RatPolynomial rep_;
};

enum class Ordering { Less, Equal, Greater };

/// Exact comparison; throws Error(FieldMismatch) if the fields differ.
Ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Interval of width < 2^-bits containing the real value of `a`.
RatInterval approx(const AlgebraicNumber& a, unsigned bits);

/// Decimal string of a rational with `digits` fractional digits, rounded toward
/// negative infinity.
std::string decimal_string(const mpq_class& v, int digits);

/// Parses "c0 c1 ..." rationals into an element of `field`.
AlgebraicNumber parse_algebraic(const FieldPtr& field, const std::string& text);

}  // namespace veer::algebra
