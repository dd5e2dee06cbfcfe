#include "veer/bounds/bounds.hpp"

#include "veer/error.hpp"
#include "veer/track/train_track.hpp"

#include <stdexcept>

namespace veer::bounds {

using algebra::NumberField;
using algebra::Ordering;

namespace {

AlgebraicNumber in_field(const algebra::FieldPtr& f, const mpq_class& q) { return AlgebraicNumber(f, q); }

AlgebraicNumber sqrt3() { return AlgebraicNumber::generator(NumberField::make(algebra::IntPolynomial{-3, 0, 1}, {1, 2})); }

}  // namespace

Ordering compare_reals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.field()->same_as(*b.field())) return compare(a, b);
  if (a.is_rational()) return compare(in_field(b.field(), a.rational_value()), b);
  if (b.is_rational()) return compare(a, in_field(a.field(), b.rational_value()));
  // Distinct irrational fields: the numbers can still coincide, which the
  // intervals would never decide, so stop at a generous precision.
  for (unsigned bits = 32; bits <= 8192; bits *= 2) {
    RatInterval x = approx(a, bits), y = approx(b, bits);
    if (x.hi < y.lo) return Ordering::Less;
    if (x.lo > y.hi) return Ordering::Greater;
  }
  throw Error(ErrorCode::BadParameters, "cannot separate " + a.to_decimal(20) + " from " + b.to_decimal(20));
}

BoundReport verify_inequality(const moves::RunResult& run) {
  if (!run.certificate) throw std::invalid_argument("run has no periodicity certificate");
  const auto& cert = *run.certificate;
  const auto& t = run.sequence.tracks.at(cert.n);
  auto summary = track::validate(t);

  BoundReport r;
  r.genus = summary.genus;
  r.punctures = summary.punctures;
  r.e = t.num_branches();
  r.branch_bound = track::branch_bound(r.genus, r.punctures);
  r.maximal = true;
  for (const auto& region : summary.regions)
    r.maximal = r.maximal && (region.punctured ? region.cusps == 1 : region.cusps == 3);
  r.steps = cert.m;
  r.m = cert.splits;
  r.lambda = cert.pf.lambda;
  r.psi_exponent = mpq_class(6 * r.genus - 6 + 2 * r.punctures, 3);
  r.psi_exponent.canonicalize();

  if (r.e > r.branch_bound)
    throw Error(ErrorCode::BoundViolated, std::to_string(r.e) + " branches exceed 18g - 18 + 6n = " + std::to_string(r.branch_bound));
  if (r.maximal != (r.e == r.branch_bound))
    throw Error(ErrorCode::BoundViolated, "branch count equality does not match the region shapes");
  for (const auto& f : moves::fold_factors(run.sequence, cert.n, cert.m))
    if (f.entry_sum() != r.e + 2)
      throw Error(ErrorCode::BoundViolated, "fold factor with entry sum " + f.entry_sum().get_str());

  AlgebraicNumber power = r.lambda.pow(static_cast<unsigned>(r.e));
  AlgebraicNumber margin = power - in_field(r.lambda.field(), mpq_class(2 * r.m + 1));
  if (margin.sign() < 0)
    throw Error(ErrorCode::BoundViolated, "lambda^" + std::to_string(r.e) + " < " + std::to_string(2 * r.m + 1));
  r.margin = approx(margin, 64);
  return r;
}

bool psi_membership(const AlgebraicNumber& lambda, int genus, int punctures, const AlgebraicNumber& p) {
  const int exponent = 6 * genus - 6 + 2 * punctures;
  if (genus < 0 || punctures < 0 || exponent <= 0)
    throw Error(ErrorCode::BadParameters, "2g - 2 + 2n/3 must be positive");
  if (compare_reals(p, in_field(NumberField::rationals(), mpq_class(1))) != Ordering::Greater)
    throw Error(ErrorCode::BadParameters, "P must exceed 1");
  return compare_reals(lambda.pow(static_cast<unsigned>(exponent)), p.pow(3)) != Ordering::Greater;
}

mpz_class tetrahedra_bound(const AlgebraicNumber& p) {
  if (compare_reals(p, in_field(NumberField::rationals(), mpq_class(1))) != Ordering::Greater)
    throw Error(ErrorCode::BadParameters, "P must exceed 1");
  AlgebraicNumber x = mpq_class(1, 2) * (p.pow(9) - in_field(p.field(), mpq_class(1)));
  if (x.is_rational()) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.rational_value().get_num_mpz_t(), x.rational_value().get_den_mpz_t());
    return q;
  }
  // an irrational value is never an integer, so refinement settles the floor
  for (unsigned bits = 64;; bits *= 2) {
    RatInterval iv = approx(x, bits);
    mpz_class lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
    if (lo == hi) return lo;
  }
}

bool delta_hypothesis(const AlgebraicNumber& delta, int genus) {
  if (genus < 2) throw Error(ErrorCode::BadParameters, "genus must be at least 2");
  AlgebraicNumber bound = in_field(sqrt3().field(), mpq_class(2)) + sqrt3();
  return compare_reals(delta.pow(static_cast<unsigned>(genus - 1)), bound) != Ordering::Greater;
}

AlgebraicNumber two_plus_sqrt3_squared() {
  AlgebraicNumber s = sqrt3();
  AlgebraicNumber x = in_field(s.field(), mpq_class(2)) + s;
  return x * x;
}

}  // namespace veer::bounds
