#include "veer/bounds/bounds.hpp"
#include "veer/cli/seed.hpp"
#include "veer/error.hpp"
#include "veer/moves/sequence.hpp"

#include <doctest.h>

using namespace veer;
using namespace veer::bounds;
using algebra::AlgebraicNumber;
using algebra::IntPolynomial;
using algebra::NumberField;

namespace {

AlgebraicNumber rational(long p, long q = 1) { return AlgebraicNumber(NumberField::rationals(), mpq_class(p, q)); }

AlgebraicNumber largest_root(const IntPolynomial& p) { return AlgebraicNumber::generator(NumberField::largest_root(p)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Parse;  // sentinel: nothing thrown
}

}  // namespace

TEST_CASE("RL satisfies 2m + 1 <= lambda^e") {
  auto seed = cli::seed_punctured_torus("RL");
  auto run = moves::run_sequence(seed.track, seed.measure);
  auto r = verify_inequality(run);
  CHECK(r.genus == 1);
  CHECK(r.punctures == 1);
  CHECK(r.e == 3);
  CHECK(r.m == 2);
  CHECK(r.steps == 2);
  CHECK(r.branch_bound == 6);
  CHECK_FALSE(r.maximal);
  CHECK(r.psi_exponent == mpq_class(2, 3));
  // lambda^3 - 5 = 17.944... - 5
  CHECK(r.margin.lo > mpq_class(1294, 100));
  CHECK(r.margin.hi < mpq_class(1295, 100));
}

TEST_CASE("every torus word passes the inequality") {
  for (const char* w : {"RRL", "RLL", "RRRL", "RRLL", "RLRRL", "RRRRRL"}) {
    CAPTURE(w);
    auto seed = cli::seed_punctured_torus(w);
    auto run = moves::run_sequence(seed.track, seed.measure, 200, static_cast<int>(std::string(w).size()));
    auto r = verify_inequality(run);
    CHECK(r.m == static_cast<int>(std::string(w).size()));
    CHECK(r.margin.lo >= 0);
  }
}

TEST_CASE("psi membership in integer form") {
  auto golden = largest_root(IntPolynomial{1, -3, 1});
  CHECK(psi_membership(golden, 1, 1, rational(100)));
  CHECK(psi_membership(golden, 1, 1, rational(2)));  // lambda^2 = 6.85 <= 8
  CHECK(psi_membership(golden, 1, 1, rational(19, 10)));         // 1.9^3 = 6.859 >= 6.854
  CHECK_FALSE(psi_membership(golden, 1, 1, rational(189, 100)));  // 1.89^3 = 6.751
  auto sigma = largest_root(IntPolynomial{1, -2, 0, -2, 1});
  // lambda^4 = 27.82..., so P = 3.03 (P^3 = 27.82...) is the boundary
  CHECK(psi_membership(sigma, 0, 5, rational(304, 100)));
  CHECK_FALSE(psi_membership(sigma, 0, 5, rational(302, 100)));
  CHECK(code_of([&] { psi_membership(golden, 0, 3, rational(10)); }) == ErrorCode::BadParameters);
  CHECK(code_of([&] { psi_membership(golden, 1, 1, rational(1)); }) == ErrorCode::BadParameters);
}

TEST_CASE("tetrahedra bound") {
  CHECK(tetrahedra_bound(rational(2)) == 255);
  CHECK(tetrahedra_bound(rational(3)) == 9841);
  mpz_class b = tetrahedra_bound(two_plus_sqrt3_squared());
  CHECK(b == mpz_class("9863382150"));
  CHECK(b <= mpz_class("10000000000"));
  CHECK(code_of([] { tetrahedra_bound(rational(1, 2)); }) == ErrorCode::BadParameters);
}

TEST_CASE("delta hypothesis") {
  // the genus 2 minimum is the largest root of x^4 - x^3 - x^2 - x + 1 (about 1.722)
  auto d2 = largest_root(IntPolynomial{1, -1, -1, -1, 1});
  CHECK(delta_hypothesis(d2, 2));
  CHECK_FALSE(delta_hypothesis(rational(2), 3));  // 4 > 3.73
  CHECK(delta_hypothesis(rational(3, 2), 3));    // 2.25
  CHECK(code_of([] { delta_hypothesis(rational(3, 2), 1); }) == ErrorCode::BadParameters);
}

TEST_CASE("compare_reals across fields") {
  auto s2 = largest_root(IntPolynomial{-2, 0, 1});
  auto s3 = largest_root(IntPolynomial{-3, 0, 1});
  CHECK(compare_reals(s2, s3) == algebra::Ordering::Less);
  CHECK(compare_reals(s3, rational(17, 10)) == algebra::Ordering::Greater);
  CHECK(compare_reals(rational(1), s2) == algebra::Ordering::Less);
}
