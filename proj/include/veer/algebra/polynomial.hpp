#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace veer::algebra {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the last coefficient is nonzero.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  static Polynomial constant(const Coeff& v) { return Polynomial(std::vector<Coeff>{v}); }
  static Polynomial monomial(std::size_t deg, const Coeff& v = Coeff(1)) {
    std::vector<Coeff> c(deg + 1, Coeff(0));
    c[deg] = v;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }

  Coeff eval(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Coeff> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Coeff(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& a) {
    std::vector<Coeff> r(a.c_);
    for (auto& v : r) v *= s;
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

/// Quotient and remainder over the rationals; `b` must be nonzero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial rem(const RatPolynomial& a, const RatPolynomial& b);
/// Monic greatest common divisor (zero if both are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial monic(const RatPolynomial& a);

RatPolynomial to_rational(const IntPolynomial& p);
/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of `p`.
IntPolynomial primitive_part(const RatPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Exact division over the integers; returns false if `b` does not divide `a`.
bool divides_exactly(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr);

/// Square-free part (primitive, positive leading coefficient).
IntPolynomial squarefree_part(const IntPolynomial& p);

/// "c0 c1 ... cd", lowest degree first; "0" for the zero polynomial.
std::string to_coeff_string(const IntPolynomial& p);
std::string to_coeff_string(const RatPolynomial& p);
/// Human-readable form such as "x^4 - 2x^3 - 2x + 1".
std::string to_pretty_string(const IntPolynomial& p, const std::string& var = "x");

IntPolynomial parse_int_polynomial(const std::string& text);
RatPolynomial parse_rat_polynomial(const std::string& text);

/// Closed rational interval [lo, hi].
struct RatInterval {
  mpq_class lo;
  mpq_class hi;

  mpq_class width() const { return hi - lo; }
  bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);

/// Horner evaluation in interval arithmetic; the result encloses p(x) for
/// every x in `x`.
RatInterval eval_interval(const RatPolynomial& p, const RatInterval& x);

}  // namespace veer::algebra
