#include "helpers.hpp"
#include "veer/cli/seed.hpp"
#include "veer/error.hpp"
#include "veer/moves/canonical.hpp"
#include "veer/moves/moves.hpp"
#include "veer/moves/sequence.hpp"
#include "veer/algebra/factor.hpp"

#include <doctest.h>

#include <random>

using namespace veer;
using namespace veer::moves;
using track::BranchType;
using track::classify_branch;
using track::Slot;
using testing::integer_measures;
using testing::random_valid_tracks;
using testing::rational_measure;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

int br(const TrainTrack& t, int sw, Slot s) { return TrainTrack::branch_of(t.dart_at(sw, s)); }

struct Fig2 {
  TrainTrack t;
  Measure mu;
  int e;
};

// A measured track with a large branch whose neighbours weigh
// NW = 1, SW = 2, NE = 2, SE = 1 (so the branch weighs 3).
Fig2 find_fig2() {
  for (unsigned seed = 1; seed < 50; ++seed)
    for (const auto& t : random_valid_tracks(6, 30, seed, false))
      for (int e = 0; e < t.num_branches(); ++e) {
        if (classify_branch(t, e) != BranchType::Large) continue;
        int s1 = t.endpoint(e, 0).sw, s2 = t.endpoint(e, 1).sw;
        int nw = br(t, s1, Slot::SmallRight), sw = br(t, s1, Slot::SmallLeft);
        int ne = br(t, s2, Slot::SmallLeft), se = br(t, s2, Slot::SmallRight);
        for (const auto& w : integer_measures(t, 4, 4000))
          if (w[nw] == 1 && w[sw] == 2 && w[ne] == 2 && w[se] == 1) return {t, rational_measure(w), e};
      }
  FAIL("no fixture track found");
  return {};
}

}  // namespace

TEST_CASE("split with weights (1,2,2,1) is a left split giving weight 1") {
  Fig2 f = find_fig2();
  CHECK(f.mu[f.e].rational_value() == 3);
  Moved m = split(f.t, f.mu, f.e);
  CHECK(m.record.kind == MoveKind::SplitLeft);
  CHECK(m.measure[f.e].rational_value() == 1);
  track::validate_measure(m.track, m.measure);
  auto before = track::validate(f.t), after = track::validate(m.track);
  CHECK(before.genus == after.genus);
  CHECK(before.punctures == after.punctures);
  CHECK(classify_branch(m.track, f.e) == BranchType::Small);

  // fold undoes it, weight = 1 + 1 + 1
  Moved back = fold(m.track, m.measure, f.e);
  CHECK(back.track == f.t);
  CHECK(back.measure[f.e].rational_value() == 3);
  for (int b = 0; b < f.t.num_branches(); ++b) CHECK(back.measure[b] == f.mu[b]);
  CHECK(fold_matrix(f.t.num_branches(), m.record).entry_sum() == f.t.num_branches() + 2);
}

TEST_CASE("move preconditions") {
  TrainTrack t = track::punctured_torus_track();
  auto q = algebra::NumberField::rationals();
  Measure mu{{algebra::AlgebraicNumber(q, 2), algebra::AlgebraicNumber(q, 1), algebra::AlgebraicNumber(q, 1)}};
  CHECK(code_of([&] { split(t, mu, 0); }) == ErrorCode::CentralSplit);
  CHECK(code_of([&] { split(t, mu, 1); }) == ErrorCode::NotLarge);
  CHECK(code_of([&] { fold(t, 0); }) == ErrorCode::NotSmall);
  CHECK(code_of([&] { shift(t, 0); }) == ErrorCode::NotMixed);
  CHECK(code_of([&] { maximal_split(t, mu); }) == ErrorCode::CentralSplitInBatch);
}

TEST_CASE("split then fold is the identity on random measured tracks") {
  int checked = 0;
  for (int v : {4, 6})
    for (const auto& t : random_valid_tracks(v, 15, 40 + v, false)) {
      auto measures = integer_measures(t, 5, 30);
      for (const auto& w : measures) {
        Measure mu = rational_measure(w);
        auto s0 = track::validate(t);
        for (int e = 0; e < t.num_branches(); ++e) {
          if (classify_branch(t, e) != BranchType::Large) continue;
          Moved m;
          try {
            m = split(t, mu, e);
          } catch (const Error& err) {
            CHECK(err.code() == ErrorCode::CentralSplit);
            continue;
          }
          auto s1 = track::validate(m.track);
          CHECK(s1.genus == s0.genus);
          CHECK(s1.punctures == s0.punctures);
          CHECK(s1.regions.size() == s0.regions.size());
          track::validate_measure(m.track, m.measure);
          for (const auto& x : track::check_excluded(m.track)) CHECK(x.branch != e);
          Moved back = fold(m.track, m.measure, e);
          CHECK(back.track == t);
          for (int b = 0; b < t.num_branches(); ++b) CHECK(back.measure[b] == mu[b]);
          ++checked;
        }
      }
    }
  CHECK(checked > 20);
}

TEST_CASE("shift is an involution and keeps tracks valid") {
  int checked = 0;
  for (int v : {4, 6, 8})
    for (const auto& t : random_valid_tracks(v, 10, 90 + v, false)) {
      auto s0 = track::validate(t);
      for (int b = 0; b < t.num_branches(); ++b) {
        if (classify_branch(t, b) != BranchType::Mixed) continue;
        if (t.endpoint(b, 0).sw == t.endpoint(b, 1).sw) continue;
        Moved m = shift(t, b);
        CHECK(m.track.num_branches() == t.num_branches());
        CHECK(m.track.num_switches() == t.num_switches());
        auto s1 = track::validate(m.track);
        CHECK(s1.genus == s0.genus);
        CHECK(s1.punctures == s0.punctures);
        CHECK(classify_branch(m.track, b) == BranchType::Mixed);
        CHECK(shift(m.track, b).track == t);
        ++checked;
      }
    }
  CHECK(checked > 20);
}

TEST_CASE("measured shift keeps the switch conditions") {
  int checked = 0;
  for (const auto& t : random_valid_tracks(6, 40, 3, false))
    for (const auto& w : integer_measures(t, 6, 5)) {
      Measure mu = rational_measure(w);
      for (int b = 0; b < t.num_branches(); ++b) {
        if (classify_branch(t, b) != BranchType::Mixed || t.endpoint(b, 0).sw == t.endpoint(b, 1).sw) continue;
        Moved m = shift(t, mu, b);
        track::validate_measure(m.track, m.measure);
        ++checked;
      }
    }
  CHECK(checked > 5);
}

TEST_CASE("canonical form is invariant under relabeling and scaling") {
  std::mt19937_64 rng(8);
  auto q = algebra::NumberField::rationals();
  for (const auto& t : random_valid_tracks(8, 10, 12, false)) {
    auto ms = integer_measures(t, 6, 3);
    if (ms.empty()) continue;
    Measure mu = rational_measure(ms.back());
    auto key = canonical_form(t, mu);
    for (int k = 0; k < 5; ++k) {
      auto r = testing::random_relabel(t, mu, rng);
      auto other = canonical_form(r.track, r.measure);
      CHECK(key.same_key(other));
      auto iso = isomorphism_between(t, key, r.track, other);
      for (int b = 0; b < t.num_branches(); ++b) CHECK(r.measure[iso.branch_map[b]] == mu[b]);
    }
    Measure scaled = mu;
    for (auto& w : scaled.weights) w = mpq_class(7) * w;
    CHECK(key.same_key(canonical_form(t, scaled)));
    // unmeasured keys agree, measured keys see the weights
    CHECK(canonical_form(t).structure == key.structure);
  }
}

TEST_CASE("punctured torus RL: alternating splits, period 2, dilatation (3+sqrt5)/2") {
  auto seed = cli::seed_punctured_torus("RL");
  track::validate_measure(seed.track, seed.measure);
  auto b0 = maximal_split(seed.track, seed.measure);
  REQUIRE(b0.batch.size() == 1);
  CHECK(b0.batch[0].kind == MoveKind::SplitLeft);
  auto b1 = maximal_split(b0.track, b0.measure);
  REQUIRE(b1.batch.size() == 1);
  CHECK(b1.batch[0].kind == MoveKind::SplitRight);

  auto k0 = canonical_form(seed.track, seed.measure);
  CHECK(!k0.same_key(canonical_form(b0.track, b0.measure)));
  CHECK(k0.same_key(canonical_form(b1.track, b1.measure)));

  auto run = run_sequence(seed.track, seed.measure);
  REQUIRE(run.certificate);
  const auto& c = *run.certificate;
  CHECK(c.n == 0);
  CHECK(c.m == 2);
  CHECK(c.splits == 2);
  CHECK(algebra::to_coeff_string(c.pf.minpoly) == "1 -3 1");
  CHECK((c.scale * c.pf.lambda) == algebra::AlgebraicNumber(c.scale.field(), mpq_class(1)));
  CHECK(c.scale.sign() > 0);
  CHECK(c.pf.lambda.to_decimal(10) == "2.6180339887");
  for (const auto& f : fold_factors(run.sequence, c.n, c.m)) CHECK(f.entry_sum() == 3 + 2);
}

TEST_CASE("punctured torus words replay as split parities") {
  std::vector<std::string> words;
  for (int len = 2; len <= 6; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (bits >> i & 1) ? 'L' : 'R';
      if (w.find('R') != std::string::npos && w.find('L') != std::string::npos) words.push_back(w);
    }
  for (const auto& w : words) {
    CAPTURE(w);
    auto seed = cli::seed_punctured_torus(w);
    auto run = run_sequence(seed.track, seed.measure, 100, static_cast<int>(w.size()));
    REQUIRE(run.certificate);
    CHECK(run.certificate->n == 0);
    CHECK(run.certificate->m == static_cast<int>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
      REQUIRE(run.sequence.batches[i].size() == 1);
      CHECK(run.sequence.batches[i][0].kind == (w[i] == 'R' ? MoveKind::SplitLeft : MoveKind::SplitRight));
    }
    auto oracle = algebra::irreducible_factors(algebra::char_poly(cli::word_matrix(w)));
    CHECK(std::find(oracle.begin(), oracle.end(), run.certificate->pf.minpoly) != oracle.end());
  }
}

TEST_CASE("seed errors") {
  CHECK(code_of([] { cli::seed_punctured_torus("R"); }) == ErrorCode::NotPseudoAnosov);
  CHECK(code_of([] { cli::seed_punctured_torus("LLL"); }) == ErrorCode::NotPseudoAnosov);
  CHECK(code_of([] { cli::seed_punctured_torus("RXL"); }) == ErrorCode::BadParameters);
  auto m = cli::word_matrix("RRL");
  CHECK(m == algebra::IntegerMatrix{{3, 2}, {1, 1}});
  CHECK(algebra::to_coeff_string(cli::seed_punctured_torus("RRL").pf.minpoly) == "1 -4 1");
}

TEST_CASE("rational measures never certify") {
  TrainTrack t = track::punctured_torus_track();
  auto q = algebra::NumberField::rationals();
  Measure mu{{algebra::AlgebraicNumber(q, 3), algebra::AlgebraicNumber(q, 1), algebra::AlgebraicNumber(q, 2)}};
  CHECK(code_of([&] { run_sequence(t, mu); }) == ErrorCode::CentralSplitInBatch);
}

TEST_CASE("tied maximal branches split in either order to the same state") {
  int checked = 0;
  for (unsigned seed = 1; seed < 40 && checked < 5; ++seed)
    for (const auto& t : random_valid_tracks(8, 10, seed, false))
      for (const auto& w : integer_measures(t, 6, 200)) {
        Measure mu = rational_measure(w);
        auto top = maximal_branches(mu);
        if (top.size() < 2) continue;
        BatchResult forward;
        try {
          forward = maximal_split(t, mu);
        } catch (const Error&) {
          continue;
        }
        TrainTrack tr = t;
        Measure m = mu;
        for (auto it = top.rbegin(); it != top.rend(); ++it) {
          Moved x = split(tr, m, *it);
          tr = x.track;
          m = x.measure;
        }
        CHECK(canonical_form(tr, m).same_key(canonical_form(forward.track, forward.measure)));
        CHECK(tr == forward.track);
        ++checked;
        break;
      }
  CHECK(checked > 0);
}

TEST_CASE("sequence dump round trip") {
  auto seed = cli::seed_punctured_torus("RRL");
  auto run = run_sequence(seed.track, seed.measure);
  std::string text = dump_sequence(run);
  CHECK(text.find("period n=0 m=3") != std::string::npos);
  CHECK(text.rfind("step 0 | batch 0L | weights", 0) == 0);
  auto parsed = parse_sequence_dump(text);
  CHECK(parsed.steps.size() == 4);
  REQUIRE(parsed.period);
  CHECK(parsed.period->m == 3);
  CHECK(write_sequence_dump(parsed) == text);
  CHECK_THROWS_AS(parse_sequence_dump("step 0 | oops\n"), ParseError);
}
