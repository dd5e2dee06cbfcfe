#include "veer/algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace veer::algebra {

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<mpq_class> r(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<mpq_class> q(a.degree() - db + 1, mpq_class(0));
  const mpq_class lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    mpq_class f = r[i] / lead;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial rem(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

RatPolynomial monic(const RatPolynomial& a) {
  if (a.is_zero()) return a;
  mpq_class inv = 1 / a.leading();
  return inv * a;
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = rem(x, y);
    x = std::move(y);
    // keep coefficient growth in check
    y = monic(r);
  }
  return monic(x);
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  mpz_class den = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> c;
  for (const auto& v : p.coeffs()) {
    mpq_class s = v * den;
    c.push_back(s.get_num());
  }
  return primitive_part(IntPolynomial(std::move(c)));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = 0;
  for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (p.leading() < 0) g = -g;
  std::vector<mpz_class> c;
  for (const auto& v : p.coeffs()) c.push_back(v / g);
  return IntPolynomial(std::move(c));
}

bool divides_exactly(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<mpz_class> r(a.coeffs());
  const int db = b.degree();
  std::vector<mpz_class> q(a.degree() - db + 1, mpz_class(0));
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.leading().get_mpz_t())) return false;
    mpz_class f = r[i] / b.leading();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  for (const auto& v : r)
    if (v != 0) return false;
  if (quotient) *quotient = IntPolynomial(std::move(q));
  return true;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  RatPolynomial rp = to_rational(p);
  RatPolynomial g = gcd(rp, rp.derivative());
  return primitive_part(divmod(rp, g).first);
}

namespace {

template <class C>
std::string coeff_string(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ' ';
    os << p.coeffs()[i].get_str();
  }
  return os.str();
}

}  // namespace

std::string to_coeff_string(const IntPolynomial& p) { return coeff_string(p); }
std::string to_coeff_string(const RatPolynomial& p) { return coeff_string(p); }

std::string to_pretty_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const mpz_class& c = p.coeffs()[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPolynomial parse_int_polynomial(const std::string& text) {
  std::istringstream is(text);
  std::vector<mpz_class> c;
  std::string tok;
  while (is >> tok) {
    mpz_class v;
    if (v.set_str(tok, 10) != 0) throw std::invalid_argument("bad integer coefficient '" + tok + "'");
    c.push_back(v);
  }
  if (c.empty()) throw std::invalid_argument("empty coefficient list");
  return IntPolynomial(std::move(c));
}

RatPolynomial parse_rat_polynomial(const std::string& text) {
  std::istringstream is(text);
  std::vector<mpq_class> c;
  std::string tok;
  while (is >> tok) {
    mpq_class v;
    if (v.set_str(tok, 10) != 0 || (tok.find('/') != std::string::npos && v.get_den() == 0))
      throw std::invalid_argument("bad rational coefficient '" + tok + "'");
    v.canonicalize();
    c.push_back(v);
  }
  if (c.empty()) throw std::invalid_argument("empty coefficient list");
  return RatPolynomial(std::move(c));
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  mpq_class p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RatInterval eval_interval(const RatPolynomial& p, const RatInterval& x) {
  RatInterval acc{0, 0};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + RatInterval{*it, *it};
  return acc;
}

}  // namespace veer::algebra
