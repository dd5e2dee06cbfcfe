#include "veer/algebra/matrix.hpp"

#include "veer/algebra/factor.hpp"
#include "veer/algebra/roots.hpp"
#include "veer/error.hpp"

#include <sstream>
#include <stdexcept>

namespace veer::algebra {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix must be square");
    for (long v : row) a_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

mpz_class IntegerMatrix::entry_sum() const {
  mpz_class s = 0;
  for (const auto& v : a_) s += v;
  return s;
}

bool IntegerMatrix::all_positive() const {
  for (const auto& v : a_)
    if (v <= 0) return false;
  return true;
}

IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
  IntegerMatrix r(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i)
    for (std::size_t k = 0; k < x.n_; ++k) {
      const mpz_class& xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < x.n_; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntPolynomial char_poly(const IntegerMatrix& a) {
  const std::size_t n = a.dimension();
  std::vector<mpz_class> c(n + 1, mpz_class(0));
  c[n] = 1;
  IntegerMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntegerMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    IntegerMatrix am = a * mk;
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    mpz_class kk = static_cast<unsigned long>(k);
    c[n - k] = -tr / kk;  // exact
  }
  return IntPolynomial(std::move(c));
}

bool is_primitive(const IntegerMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return false;
  std::vector<char> pattern(n * n), power(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pattern[i * n + j] = power[i * n + j] = m(i, j) > 0;
  const std::size_t limit = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= limit; ++k) {
    bool all = true;
    for (char v : power) all = all && v;
    if (all) return true;
    std::vector<char> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (power[i * n + l])
          for (std::size_t j = 0; j < n; ++j)
            if (pattern[l * n + j]) next[i * n + j] = 1;
    power.swap(next);
  }
  return false;
}

std::vector<AlgebraicNumber> multiply(const IntegerMatrix& m, const std::vector<AlgebraicNumber>& v) {
  const std::size_t n = m.dimension();
  if (v.size() != n) throw std::invalid_argument("vector dimension mismatch");
  std::vector<AlgebraicNumber> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatPolynomial acc;
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) acc = acc + mpq_class(m(i, j)) * v[j].rep();
    out.emplace_back(v.empty() ? NumberField::rationals() : v[0].field(), acc);
  }
  return out;
}

std::vector<std::vector<AlgebraicNumber>> eigenspace(const IntegerMatrix& m, const AlgebraicNumber& lambda) {
  const std::size_t n = m.dimension();
  const FieldPtr& f = lambda.field();
  std::vector<std::vector<AlgebraicNumber>> a(n, std::vector<AlgebraicNumber>(n, AlgebraicNumber(f, mpq_class(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = AlgebraicNumber(f, mpq_class(m(i, j)));
      if (i == j) a[i][j] = a[i][j] - lambda;
    }
  // reduced row echelon form
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    AlgebraicNumber inv = a[row][col].inverse();
    for (auto& v : a[row]) v = v * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      AlgebraicNumber factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = a[r][c] - factor * a[row][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<AlgebraicNumber>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<AlgebraicNumber> v(n, AlgebraicNumber(f, mpq_class(0)));
    v[free] = AlgebraicNumber(f, mpq_class(1));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Decide which of two isolating intervals (of roots of different irreducible
// polynomials) holds the larger root.
bool first_root_larger(const RatPolynomial& p, RatInterval a, const RatPolynomial& q, RatInterval b) {
  while (true) {
    if (a.lo > b.hi) return true;
    if (b.lo > a.hi) return false;
    a = bisect_root(p, a);
    b = bisect_root(q, b);
    if (a.lo == a.hi && b.lo == b.hi) return a.lo > b.lo;
  }
}

}  // namespace

SpectralFactor spectral_radius_factor(const IntegerMatrix& m) {
  IntPolynomial cp = char_poly(m);
  auto factors = irreducible_factors(cp);
  int best = -1;
  RatInterval best_iv;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto roots = isolate_real_roots(factors[i]);
    if (roots.empty()) continue;
    if (best < 0 || first_root_larger(to_rational(factors[i]), roots.back(), to_rational(factors[best]), best_iv)) {
      best = static_cast<int>(i);
      best_iv = roots.back();
    }
  }
  if (best < 0) throw std::logic_error("characteristic polynomial has no real root");
  return {factors[best], best_iv};
}

bool is_spectral_root(const SpectralFactor& s, const AlgebraicNumber& x) {
  RatPolynomial f = to_rational(s.factor);
  // Horner evaluation of the factor at x inside the field of x
  AlgebraicNumber acc(x.field(), mpq_class(0));
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + AlgebraicNumber(x.field(), *it);
  if (!acc.is_zero()) return false;
  AlgebraicNumber lo(x.field(), s.root.lo), hi(x.field(), s.root.hi);
  return compare(x, lo) != Ordering::Less && compare(x, hi) != Ordering::Greater;
}

PerronFrobenius pf_eigenpair(const IntegerMatrix& m) {
  if (m.dimension() == 0) throw std::invalid_argument("empty matrix");
  if (!is_primitive(m)) throw Error(ErrorCode::NotPrimitive, "no power of " + m.to_string() + " is strictly positive");

  SpectralFactor sf = spectral_radius_factor(m);
  const auto& factors = std::vector<IntPolynomial>{sf.factor};
  const int best = 0;
  const RatInterval best_iv = sf.root;
  PerronFrobenius pf;
  pf.minpoly = factors[best];
  pf.field = NumberField::make(pf.minpoly, best_iv);
  pf.lambda = pf.minpoly.degree() == 1 ? AlgebraicNumber(pf.field, mpq_class(-pf.minpoly.coeffs()[0], pf.minpoly.coeffs()[1]))
                                       : AlgebraicNumber::generator(pf.field);
  auto basis = eigenspace(m, pf.lambda);
  if (basis.size() != 1) throw std::logic_error("Perron-Frobenius eigenspace is not one-dimensional");
  auto v = basis[0];
  AlgebraicNumber first = v[0];
  if (first.is_zero()) throw std::logic_error("Perron-Frobenius vector has a zero coordinate");
  AlgebraicNumber inv = first.inverse();
  for (auto& x : v) x = x * inv;
  for (const auto& x : v)
    if (x.sign() <= 0) throw std::logic_error("Perron-Frobenius vector is not positive");
  pf.vector = std::move(v);
  return pf;
}

PerronFrobenius dominant_eigenpair(const IntegerMatrix& m, const std::optional<AlgebraicNumber>& lambda) {
  if (m.dimension() == 0) throw std::invalid_argument("empty matrix");
  SpectralFactor sf = spectral_radius_factor(m);
  PerronFrobenius pf;
  pf.minpoly = sf.factor;
  if (lambda) {
    if (!is_spectral_root(sf, *lambda)) throw std::invalid_argument("given eigenvalue is not the spectral radius");
    pf.field = lambda->field();
    pf.lambda = *lambda;
  } else {
    pf.field = NumberField::make(pf.minpoly, sf.root);
    pf.lambda = pf.minpoly.degree() == 1
                    ? AlgebraicNumber(pf.field, mpq_class(-pf.minpoly.coeffs()[0], pf.minpoly.coeffs()[1]))
                    : AlgebraicNumber::generator(pf.field);
  }
  auto basis = eigenspace(m, pf.lambda);
  if (basis.size() != 1)
    throw Error(ErrorCode::NotPrimitive, "eigenspace of the largest eigenvalue has dimension " + std::to_string(basis.size()));
  auto v = basis[0];
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  AlgebraicNumber inv = v[lead].inverse();
  for (auto& x : v) x = x * inv;
  for (const auto& x : v)
    if (x.sign() <= 0) throw Error(ErrorCode::NotPrimitive, "dominant eigenvector is not positive");
  pf.vector = std::move(v);
  return pf;
}

}  // namespace veer::algebra
