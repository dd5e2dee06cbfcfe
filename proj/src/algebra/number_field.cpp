#include "veer/algebra/number_field.hpp"

#include "veer/algebra/factor.hpp"
#include "veer/algebra/roots.hpp"
#include "veer/error.hpp"

#include <sstream>

namespace veer::algebra {

namespace {

mpq_class pow2_neg(unsigned bits) {
  mpz_class den = 1;
  den <<= bits;
  return mpq_class(mpz_class(1), den);
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::make(const IntPolynomial& minpoly, const RatInterval& interval) {
  IntPolynomial mp = primitive_part(minpoly);
  if (mp.degree() < 1) throw std::invalid_argument("minimal polynomial must have positive degree");
  if (!is_irreducible(mp)) throw std::invalid_argument("polynomial " + to_pretty_string(mp) + " is not irreducible");
  if (interval.lo > interval.hi) throw std::invalid_argument("empty isolating interval");

  auto roots = isolate_real_roots(mp);
  RatPolynomial q = to_rational(mp);
  int index = -1, hits = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    RatInterval r = roots[i];
    // shrink until it is either inside or disjoint from the candidate interval
    while (true) {
      if (r.hi < interval.lo || r.lo > interval.hi) break;
      if (interval.lo <= r.lo && r.hi <= interval.hi) {
        ++hits;
        index = static_cast<int>(i);
        break;
      }
      if (r.lo == r.hi) break;
      r = bisect_root(q, r);
    }
  }
  if (hits != 1) throw std::invalid_argument("interval does not isolate exactly one real root");

  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->minpoly_ = mp;
  f->minpoly_q_ = q;
  f->interval_ = interval;
  f->root_index_ = index;
  f->tight_ = refine_root(q, roots[index], pow2_neg(64));
  return f;
}

std::shared_ptr<const NumberField> NumberField::largest_root(const IntPolynomial& minpoly) {
  auto roots = isolate_real_roots(primitive_part(minpoly));
  if (roots.empty()) throw std::invalid_argument("polynomial has no real root");
  return make(minpoly, roots.back());
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const auto q = make(IntPolynomial{0, 1}, RatInterval{0, 0});
  return q;
}

RatInterval NumberField::root_interval(const mpq_class& width) const {
  return refine_root(minpoly_q_, tight_, width);
}

std::string NumberField::descriptor_string() const {
  return to_coeff_string(minpoly_) + " ; " + interval_.lo.get_str() + " " + interval_.hi.get_str();
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, const mpq_class& value)
    : field_(std::move(field)), rep_(RatPolynomial::constant(value)) {}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, RatPolynomial rep) : field_(std::move(field)) {
  rep_ = rep.degree() >= field_->degree() ? algebra::rem(rep, field_->minpoly_rational()) : std::move(rep);
}

AlgebraicNumber AlgebraicNumber::generator(FieldPtr field) {
  return AlgebraicNumber(field, RatPolynomial::monomial(1));
}

namespace {

void require_same(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!a.field()->same_as(*b.field()))
    throw Error(ErrorCode::FieldMismatch,
                "elements of Q[" + a.field()->descriptor_string() + "] and Q[" + b.field()->descriptor_string() + "]");
}

}  // namespace

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same(a, b);
  return AlgebraicNumber(a.field_, a.rep_ + b.rep_);
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same(a, b);
  return AlgebraicNumber(a.field_, a.rep_ - b.rep_);
}

AlgebraicNumber operator-(const AlgebraicNumber& a) { return AlgebraicNumber(a.field_, -a.rep_); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  require_same(a, b);
  return AlgebraicNumber(a.field_, a.rep_ * b.rep_);
}

AlgebraicNumber operator*(const mpq_class& s, const AlgebraicNumber& a) { return AlgebraicNumber(a.field_, s * a.rep_); }

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a.field_->same_as(*b.field_) && a.rep_ == b.rep_;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::NotInvertible, "inverse of zero");
  if (is_rational()) return AlgebraicNumber(field_, 1 / rep_.coeffs()[0]);
  // extended Euclid: s * rep + t * minpoly = 1
  RatPolynomial r0 = field_->minpoly_rational(), r1 = rep_;
  RatPolynomial s0, s1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because the minimal polynomial is irreducible
  if (r0.degree() != 0) throw Error(ErrorCode::NotInvertible, "representation shares a factor with the minimal polynomial");
  return AlgebraicNumber(field_, (1 / r0.coeffs()[0]) * s0);
}

AlgebraicNumber AlgebraicNumber::pow(unsigned exponent) const {
  AlgebraicNumber result(field_, mpq_class(1)), base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

int AlgebraicNumber::sign() const {
  if (is_rational()) return sgn(rational_value());
  RatInterval root = field_->tight_interval();
  const RatPolynomial& mp = field_->minpoly_rational();
  while (true) {
    RatInterval v = eval_interval(rep_, root);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    // a nonzero element cannot vanish at lambda, so this terminates
    for (int i = 0; i < 16; ++i) root = bisect_root(mp, root);
    if (root.lo == root.hi) return sgn(rep_.eval(root.lo));
  }
}

Ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber d = a - b;
  if (d.is_zero()) return Ordering::Equal;
  return d.sign() < 0 ? Ordering::Less : Ordering::Greater;
}

RatInterval approx(const AlgebraicNumber& a, unsigned bits) {
  if (a.is_rational()) return {a.rational_value(), a.rational_value()};
  const mpq_class target = pow2_neg(bits);
  const RatPolynomial& mp = a.field()->minpoly_rational();
  RatInterval root = a.field()->tight_interval();
  while (true) {
    RatInterval v = eval_interval(a.rep(), root);
    if (v.width() < target) return v;
    for (int i = 0; i < 8; ++i) root = bisect_root(mp, root);
    if (root.lo == root.hi) {
      mpq_class x = a.rep().eval(root.lo);
      return {x, x};
    }
  }
}

std::string decimal_string(const mpq_class& v, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class scaled = v * scale;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  bool neg = fl < 0;
  mpz_class mag = abs(fl);
  std::string s = mag.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (neg ? "-" : "") + s;
}

std::string AlgebraicNumber::to_string() const {
  if (rep_.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < rep_.coeffs().size(); ++i) {
    if (i) os << ' ';
    os << rep_.coeffs()[i].get_str();
  }
  return os.str();
}

std::string AlgebraicNumber::to_decimal(int digits) const {
  RatInterval iv = approx(*this, static_cast<unsigned>(digits * 4 + 8));
  return decimal_string((iv.lo + iv.hi) / 2, digits);
}

double AlgebraicNumber::to_double() const {
  RatInterval iv = approx(*this, 60);
  mpq_class mid = (iv.lo + iv.hi) / 2;
  return mid.get_d();
}

AlgebraicNumber parse_algebraic(const FieldPtr& field, const std::string& text) {
  return AlgebraicNumber(field, parse_rat_polynomial(text));
}

}  // namespace veer::algebra
