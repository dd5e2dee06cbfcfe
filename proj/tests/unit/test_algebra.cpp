#include "veer/algebra/factor.hpp"
#include "veer/algebra/matrix.hpp"
#include "veer/algebra/number_field.hpp"
#include "veer/algebra/roots.hpp"
#include "veer/error.hpp"

#include <doctest.h>

#include <random>

using namespace veer::algebra;

namespace {

std::string coeffs(const IntPolynomial& p) { return to_coeff_string(p); }

std::vector<std::string> factor_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& f : irreducible_factors(p)) out.push_back(coeffs(f));
  return out;
}

// (3 + sqrt 5) / 2 to 19 places, from sqrt(5) = 2.2360679774997896964...
const mpq_class kGoldenSquare("26180339887498948482/10000000000000000000");

}  // namespace

TEST_CASE("char_poly on small matrices") {
  CHECK(coeffs(char_poly(IntegerMatrix{{2, 1}, {1, 1}})) == "1 -3 1");
  CHECK(coeffs(char_poly(IntegerMatrix{{1}})) == "-1 1");
  CHECK(coeffs(char_poly(IntegerMatrix{{0, 1}, {1, 0}})) == "-1 0 1");
  CHECK(coeffs(char_poly(IntegerMatrix{{3, 2}, {1, 1}})) == "1 -4 1");
}

TEST_CASE("char_poly of permutation matrices has constant term +-1") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng() % 7;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = 1;
    IntPolynomial cp = char_poly(m);
    CHECK(abs(cp.coeffs()[0]) == 1);
    // every factor is cyclotomic-type: all roots on the unit circle, so x^k - 1 kills it
    mpz_class k = 1;
    for (std::size_t i = 1; i <= n; ++i) mpz_lcm_ui(k.get_mpz_t(), k.get_mpz_t(), i);
    IntPolynomial xk = IntPolynomial::monomial(k.get_ui()) - IntPolynomial{1};
    for (const auto& f : irreducible_factors(cp)) CHECK(divides_exactly(f, xk));
  }
}

TEST_CASE("factorization agrees with an independent CAS") {
  // expected lists produced with sympy.factor_list
  CHECK(factor_strings(IntPolynomial{1, -4, 6, -8, 10, -8, 6, -4, 1}) ==
        std::vector<std::string>{"-1 1", "1 0 1", "1 -2 0 -2 1"});
  CHECK(factor_strings(IntPolynomial{-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}) ==
        std::vector<std::string>{"-1 1", "1 1", "1 -1 1", "1 0 1", "1 1 1", "1 0 -1 0 1"});
  CHECK(factor_strings(IntPolynomial{1, -6, 7, 7, -6, 1}) == std::vector<std::string>{"1 1", "1 -4 1", "1 -3 1"});
  CHECK(factor_strings(IntPolynomial{6, 5, -38, 5, 6}) ==
        std::vector<std::string>{"-2 1", "-1 2", "1 3", "3 1"});
  CHECK(factor_strings(IntPolynomial{9, 0, -3, 0, 2, 0, -1, 0, 1}) ==
        std::vector<std::string>{"9 0 -3 0 2 0 -1 0 1"});
  CHECK(factor_strings(IntPolynomial{0, 0, 1, 1}) == std::vector<std::string>{"0 1", "1 1"});
}

TEST_CASE("factor products reconstruct the square-free part") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    IntPolynomial p;
    for (int k = 0; k < 3; ++k) {
      std::vector<mpz_class> c;
      int d = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
      c.emplace_back(1 + rng() % 2);
      IntPolynomial f(std::move(c));
      p = p.is_zero() ? f : p * f;
    }
    IntPolynomial prod{1};
    for (const auto& f : irreducible_factors(p)) {
      CHECK(is_irreducible(f));
      prod = prod * f;
    }
    CHECK(primitive_part(prod) == squarefree_part(p));
  }
}

TEST_CASE("Sturm isolation") {
  auto roots = isolate_real_roots(IntPolynomial{1, -3, 1});
  REQUIRE(roots.size() == 2);
  CHECK(roots[1].contains(kGoldenSquare));
  CHECK(isolate_real_roots(IntPolynomial{1, 0, 1}).empty());
  auto lin = isolate_real_roots(IntPolynomial{-3, 2});
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].contains(mpq_class(3, 2)));
  CHECK(refine_root(to_rational(IntPolynomial{-3, 2}), lin[0], mpq_class(1, 1000)).contains(mpq_class(3, 2)));
  CHECK(isolate_real_roots(IntPolynomial{-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}).size() == 2);
}

TEST_CASE("number field construction rejects bad descriptors") {
  CHECK_THROWS(NumberField::make(IntPolynomial{-1, 0, 1}, {0, 2}));   // reducible
  CHECK_THROWS(NumberField::make(IntPolynomial{1, -3, 1}, {-10, 10}));  // two roots
  CHECK_THROWS(NumberField::make(IntPolynomial{1, -3, 1}, {3, 4}));     // no root
  auto f = NumberField::make(IntPolynomial{1, -3, 1}, {2, 3});
  CHECK(f->root_index() == 1);
  CHECK(f->descriptor_string() == "1 -3 1 ; 2 3");
}

TEST_CASE("compare and approx in Q(lambda), lambda^2 - 3 lambda + 1 = 0") {
  auto f = NumberField::make(IntPolynomial{1, -3, 1}, {2, 3});
  AlgebraicNumber lam = AlgebraicNumber::generator(f);
  AlgebraicNumber two(f, mpq_class(2));
  CHECK(compare(lam, two) == Ordering::Greater);
  CHECK(compare(two, lam) == Ordering::Less);
  CHECK(compare(lam, lam) == Ordering::Equal);
  AlgebraicNumber zero = lam * lam - mpq_class(3) * lam + AlgebraicNumber(f, mpq_class(1));
  CHECK(zero.is_zero());
  CHECK(compare(zero, AlgebraicNumber(f, mpq_class(0))) == Ordering::Equal);

  RatInterval iv = approx(lam, 30);
  CHECK(iv.width() < mpq_class(1, 1 << 30));
  CHECK(iv.contains(kGoldenSquare));
  CHECK(lam.to_decimal(10) == "2.6180339887");

  AlgebraicNumber half(f, mpq_class(3, 2));
  RatInterval h = approx(half, 5);
  CHECK(h.lo == mpq_class(3, 2));
  CHECK(h.hi == mpq_class(3, 2));

  auto g = NumberField::make(IntPolynomial{-2, 0, 1}, {1, 2});
  CHECK_THROWS_AS(compare(lam, AlgebraicNumber::generator(g)), veer::Error);
}

TEST_CASE("approx of the Sigma_{0,5} dilatation") {
  auto f = NumberField::largest_root(IntPolynomial{1, -2, 0, -2, 1});
  AlgebraicNumber lam = AlgebraicNumber::generator(f);
  RatInterval iv = approx(lam, 20);
  CHECK(iv.width() < mpq_class(1, 1000000));
  // 2.29663026288653824570... (independent high-precision root)
  CHECK(iv.contains(mpq_class("229663026288653824570/100000000000000000000")));
  CHECK(lam.to_decimal(5) == "2.29663");
}

TEST_CASE("field axioms hold on random elements") {
  auto f = NumberField::largest_root(IntPolynomial{1, -2, 0, -2, 1});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto random_element = [&] {
    std::vector<mpq_class> c;
    for (int i = 0; i < 4; ++i) c.emplace_back(num(rng), den(rng));
    for (auto& v : c) v.canonicalize();
    return AlgebraicNumber(f, RatPolynomial(std::move(c)));
  };
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraicNumber a = random_element(), b = random_element(), c = random_element();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == AlgebraicNumber(f, mpq_class(1)));
    // order is consistent with interval approximations
    Ordering o = compare(a, b);
    RatInterval ia = approx(a, 80), ib = approx(b, 80);
    if (o == Ordering::Less) CHECK(ia.hi < ib.lo);
    if (o == Ordering::Greater) CHECK(ia.lo > ib.hi);
  }
}

TEST_CASE("pf_eigenpair") {
  auto pf = pf_eigenpair(IntegerMatrix{{2, 1}, {1, 1}});
  CHECK(coeffs(pf.minpoly) == "1 -3 1");
  CHECK(pf.lambda.to_decimal(10) == "2.6180339887");
  REQUIRE(pf.vector.size() == 2);
  CHECK(pf.vector[0] == AlgebraicNumber(pf.field, mpq_class(1)));
  CHECK(pf.vector[1] == pf.lambda - AlgebraicNumber(pf.field, mpq_class(2)));

  auto one = pf_eigenpair(IntegerMatrix{{1}});
  CHECK(one.lambda == AlgebraicNumber(one.field, mpq_class(1)));
  CHECK(one.vector.size() == 1);

  CHECK_THROWS_AS(pf_eigenpair(IntegerMatrix{{1, 1}, {0, 1}}), veer::Error);
  CHECK_THROWS_AS(pf_eigenpair(IntegerMatrix{{0, 1}, {1, 0}}), veer::Error);
}

TEST_CASE("pf eigenvector is exact and positive on random primitive matrices") {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 3;
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 3);
    if (!is_primitive(m)) continue;
    auto pf = pf_eigenpair(m);
    auto mv = multiply(m, pf.vector);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(mv[i] == pf.lambda * pf.vector[i]);
      CHECK(pf.vector[i].sign() > 0);
    }
    ++checked;
  }
  CHECK(checked > 10);
}
