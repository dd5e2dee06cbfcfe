#include "veer/algebra/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace veer::algebra {

namespace {

// Polynomials over Z/pZ, coefficients in [0, p), lowest degree first, no
// trailing zeros.
using ModPoly = std::vector<mpz_class>;

class ModRing {
 public:
  explicit ModRing(mpz_class p) : p_(std::move(p)) {}

  const mpz_class& p() const { return p_; }

  mpz_class reduce(const mpz_class& v) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return r;
  }

  mpz_class inverse(const mpz_class& v) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t()) == 0)
      throw std::logic_error("non-invertible residue");
    return r;
  }

  void trim(ModPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  ModPoly from(const IntPolynomial& f) const {
    ModPoly r;
    for (const auto& c : f.coeffs()) r.push_back(reduce(c));
    trim(r);
    return r;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    for (auto& v : r) v = reduce(v);
    trim(r);
    return r;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& v : r) v = reduce(v);
    trim(r);
    return r;
  }

  // returns {quotient, remainder}
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    if (b.empty()) throw std::logic_error("modular division by zero");
    ModPoly r = a;
    if (r.size() < b.size()) return {{}, r};
    ModPoly q(r.size() - b.size() + 1, mpz_class(0));
    mpz_class inv = inverse(b.back());
    for (std::size_t i = r.size(); i-- >= b.size();) {
      if (r[i] == 0) continue;
      mpz_class f = reduce(r[i] * inv);
      q[i - b.size() + 1] = f;
      for (std::size_t j = 0; j < b.size(); ++j) r[i - b.size() + 1 + j] = reduce(r[i - b.size() + 1 + j] - f * b[j]);
    }
    trim(q);
    trim(r);
    return {q, r};
  }

  ModPoly mod(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }

  ModPoly make_monic(const ModPoly& a) const {
    if (a.empty()) return a;
    mpz_class inv = inverse(a.back());
    ModPoly r = a;
    for (auto& v : r) v = reduce(v * inv);
    return r;
  }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return make_monic(a);
  }

  ModPoly powmod(ModPoly base, mpz_class e, const ModPoly& m) const {
    ModPoly result{mpz_class(1)};
    base = mod(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = mod(mul(result, base), m);
      e >>= 1;
      if (e > 0) base = mod(mul(base, base), m);
    }
    return result;
  }

 private:
  mpz_class p_;
};

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModRing& R, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{mpz_class(0), mpz_class(1)};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = R.powmod(h, R.p(), f);
    ModPoly g = R.gcd(f, R.sub(h, x));
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = R.divmod(f, g).first;
      h = R.mod(h, f);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd p).
void equal_degree(const ModRing& R, const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(f) == d) {
    out.push_back(R.make_monic(f));
    return;
  }
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), R.p().get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  while (true) {
    ModPoly a;
    for (int i = 0; i < deg(f); ++i) a.push_back(gr.get_z_range(R.p()));
    R.trim(a);
    if (deg(a) < 1) continue;
    ModPoly g = R.gcd(f, a);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(R, g, d, rng, out);
      equal_degree(R, R.divmod(f, g).first, d, rng, out);
      return;
    }
    ModPoly b = R.sub(R.powmod(a, e, f), ModPoly{mpz_class(1)});
    g = R.gcd(f, b);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(R, g, d, rng, out);
      equal_degree(R, R.divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

mpz_class landau_mignotte(const IntPolynomial& f) {
  // 2^deg * ceil(||f||_2) bounds every coefficient of every factor
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  mpz_class pow2 = 1;
  pow2 <<= f.degree();
  return pow2 * root;
}

IntPolynomial symmetric_lift(const ModRing& R, const ModPoly& a) {
  mpz_class half = R.p() / 2;
  std::vector<mpz_class> c;
  for (const auto& v : a) c.push_back(v > half ? v - R.p() : v);
  return IntPolynomial(std::move(c));
}

std::vector<IntPolynomial> factor_squarefree_primitive(const IntPolynomial& f) {
  if (f.degree() <= 1) return {f};
  const mpz_class lc = abs(f.leading());
  mpz_class bound = 2 * lc * landau_mignotte(f) + 1;
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), bound.get_mpz_t());
  // pick a prime keeping the degree and square-freeness
  while (true) {
    ModRing R(p);
    if (R.reduce(f.leading()) != 0) {
      ModPoly fp = R.from(f);
      ModPoly dp = R.from(f.derivative());
      if (deg(R.gcd(fp, dp)) == 0) break;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  ModRing R(p);
  ModPoly fp = R.make_monic(R.from(f));

  std::mt19937_64 rng(0x5eed);
  std::vector<ModPoly> modular;
  for (auto& [g, d] : distinct_degree(R, fp)) equal_degree(R, g, d, rng, modular);

  // recombination by increasing subset size
  std::vector<IntPolynomial> result;
  IntPolynomial rest = f;
  std::size_t size = 1;
  while (2 * size <= modular.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t k) -> bool {
      if (k == size) {
        ModPoly prod{R.reduce(rest.leading())};
        for (std::size_t i : idx) prod = R.mul(prod, modular[i]);
        IntPolynomial cand = primitive_part(symmetric_lift(R, prod));
        IntPolynomial quot;
        if (cand.degree() > 0 && divides_exactly(cand, rest, &quot)) {
          result.push_back(cand);
          rest = quot;
          std::vector<ModPoly> remaining;
          for (std::size_t i = 0; i < modular.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(modular[i]);
          modular = std::move(remaining);
          return true;
        }
        return false;
      }
      for (std::size_t i = start; i < modular.size(); ++i) {
        idx[k] = i;
        if (search(i + 1, k + 1)) return true;
      }
      return false;
    };
    found = search(0, 0);
    if (!found) ++size;
  }
  if (rest.degree() > 0) result.push_back(primitive_part(rest));
  return result;
}

}  // namespace

std::vector<IntPolynomial> irreducible_factors(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  IntPolynomial sf = squarefree_part(f);
  std::vector<IntPolynomial> out;
  if (sf.degree() < 1) return out;
  // pull out powers of x first; keeps the modular step clean
  if (sf.coeffs()[0] == 0) {
    out.push_back(IntPolynomial{0, 1});
    std::vector<mpz_class> c(sf.coeffs().begin() + 1, sf.coeffs().end());
    sf = IntPolynomial(std::move(c));
  }
  for (auto& g : factor_squarefree_primitive(primitive_part(sf))) {
    if (g.degree() > 0) out.push_back(primitive_part(g));
  }
  std::sort(out.begin(), out.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  });
  return out;
}

bool is_irreducible(const IntPolynomial& f) {
  if (f.degree() < 1) return false;
  auto fs = irreducible_factors(f);
  return fs.size() == 1 && fs[0].degree() == f.degree() && squarefree_part(f).degree() == f.degree();
}

}  // namespace veer::algebra
