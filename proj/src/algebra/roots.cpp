#include "veer/algebra/roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace veer::algebra {

namespace {

int sign(const mpq_class& v) { return sgn(v); }

int sign_variations(const std::vector<RatPolynomial>& seq, const mpq_class& x) {
  int last = 0, changes = 0;
  for (const auto& q : seq) {
    int s = sign(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p) {
  std::vector<RatPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    RatPolynomial r = rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    // scale by a positive constant only; signs must be preserved
    mpq_class lc = abs(r.leading());
    seq.push_back((-1 / lc) * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int count_roots(const std::vector<RatPolynomial>& sturm, const mpq_class& a, const mpq_class& b) {
  return sign_variations(sturm, a) - sign_variations(sturm, b);
}

mpq_class root_bound(const RatPolynomial& p) {
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class r = abs(p.coeffs()[i] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<RatInterval> isolate_real_roots(const IntPolynomial& ip) {
  std::vector<RatInterval> out;
  if (ip.degree() < 1) return out;
  RatPolynomial p = to_rational(ip);
  auto seq = sturm_sequence(p);
  mpq_class bound = root_bound(p);

  struct Work {
    mpq_class a, b;
  };
  std::vector<Work> stack{{-bound, bound}};
  std::vector<RatInterval> found;
  while (!stack.empty()) {
    Work w = stack.back();
    stack.pop_back();
    int n = count_roots(seq, w.a, w.b);
    if (n == 0) continue;
    if (n == 1) {
      // root lies in (a, b]
      if (p.eval(w.b) == 0) {
        found.push_back({w.b, w.b});
      } else if (p.eval(w.a) != 0) {
        found.push_back({w.a, w.b});
      } else {
        // a is a root outside (a, b]; bisect until the endpoint moves off it
        mpq_class mid = (w.a + w.b) / 2;
        stack.push_back({mid, w.b});
        stack.push_back({w.a, mid});
      }
      continue;
    }
    mpq_class mid = (w.a + w.b) / 2;
    stack.push_back({mid, w.b});
    stack.push_back({w.a, mid});
  }
  std::sort(found.begin(), found.end(), [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
  return found;
}

RatInterval bisect_root(const RatPolynomial& p, const RatInterval& iv) {
  if (iv.lo == iv.hi) return iv;
  mpq_class mid = (iv.lo + iv.hi) / 2;
  int sm = sign(p.eval(mid));
  if (sm == 0) return {mid, mid};
  int slo = sign(p.eval(iv.lo));
  if (sm == slo) return {mid, iv.hi};
  return {iv.lo, mid};
}

RatInterval refine_root(const RatPolynomial& p, RatInterval iv, const mpq_class& width) {
  while (iv.width() > width) iv = bisect_root(p, iv);
  return iv;
}

}  // namespace veer::algebra
