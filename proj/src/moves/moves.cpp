#include "veer/moves/moves.hpp"

#include "veer/error.hpp"

#include <stdexcept>
#include <utility>

namespace veer::moves {

using algebra::AlgebraicNumber;
using algebra::Ordering;
using track::BranchType;
using track::classify_branch;
using track::Endpoint;
using track::Slot;

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::SplitLeft: return "split-left";
    case MoveKind::SplitRight: return "split-right";
    case MoveKind::Fold: return "fold";
    case MoveKind::Shift: return "shift";
  }
  return "?";
}

namespace {

int br(int dart) { return TrainTrack::branch_of(dart); }

void swap_cusp_flags(TrainTrack& t, int a, int b) {
  bool fa = t.cusp_punctured(a);
  t.set_cusp_punctured(a, t.cusp_punctured(b));
  t.set_cusp_punctured(b, fa);
}

// Rewire switch `sw` to hold the given darts in slots (L, SL, SR).
void rewire(TrainTrack& t, int sw, int large, int small_left, int small_right) {
  t.attach(large, sw, Slot::Large);
  t.attach(small_left, sw, Slot::SmallLeft);
  t.attach(small_right, sw, Slot::SmallRight);
}

Moved split_impl(const TrainTrack& t, int e, MoveKind parity) {
  if (e < 0 || e >= t.num_branches()) throw std::out_of_range("no branch " + std::to_string(e));
  if (classify_branch(t, e) != BranchType::Large) throw Error(ErrorCode::NotLarge, "branch " + std::to_string(e));
  const int s1 = t.endpoint(e, 0).sw, s2 = t.endpoint(e, 1).sw;
  const int nw = t.dart_at(s1, Slot::SmallRight), sw = t.dart_at(s1, Slot::SmallLeft);
  const int ne = t.dart_at(s2, Slot::SmallLeft), se = t.dart_at(s2, Slot::SmallRight);
  const int d1 = 2 * e, d2 = 2 * e + 1;

  Moved out{t, {}, {parity, e, s1, s2, {e}, {e}, {}}};
  TrainTrack& r = out.track;
  if (parity == MoveKind::SplitLeft) {
    rewire(r, s2, ne, d2, nw);
    rewire(r, s1, sw, d1, se);
    out.record.companions = {br(nw), br(se)};
  } else {
    rewire(r, s2, se, sw, d2);
    rewire(r, s1, nw, ne, d1);
    out.record.companions = {br(ne), br(sw)};
  }
  swap_cusp_flags(r, s1, s2);
  return out;
}

}  // namespace

Moved split(const TrainTrack& t, int e, MoveKind parity) {
  if (parity != MoveKind::SplitLeft && parity != MoveKind::SplitRight)
    throw std::invalid_argument("split parity must be left or right");
  return split_impl(t, e, parity);
}

Moved split(const TrainTrack& t, const Measure& mu, int e) {
  if (classify_branch(t, e) != BranchType::Large) throw Error(ErrorCode::NotLarge, "branch " + std::to_string(e));
  const int s1 = t.endpoint(e, 0).sw, s2 = t.endpoint(e, 1).sw;
  const AlgebraicNumber& a = mu[br(t.dart_at(s1, Slot::SmallRight))];
  const AlgebraicNumber& c = mu[br(t.dart_at(s2, Slot::SmallLeft))];
  Ordering o = compare(a, c);
  if (o == Ordering::Equal) throw Error(ErrorCode::CentralSplit, "branch " + std::to_string(e));
  MoveKind parity = o == Ordering::Less ? MoveKind::SplitLeft : MoveKind::SplitRight;
  Moved out = split_impl(t, e, parity);
  out.measure = mu;
  if (parity == MoveKind::SplitLeft) {
    out.measure[e] = c - a;
  } else {
    const AlgebraicNumber& se = mu[br(t.dart_at(s2, Slot::SmallRight))];
    const AlgebraicNumber& sw = mu[br(t.dart_at(s1, Slot::SmallLeft))];
    out.measure[e] = se - sw;
  }
  return out;
}

Moved fold(const TrainTrack& t, int e) {
  if (e < 0 || e >= t.num_branches()) throw std::out_of_range("no branch " + std::to_string(e));
  if (classify_branch(t, e) != BranchType::Small) throw Error(ErrorCode::NotSmall, "branch " + std::to_string(e));
  const Endpoint p = t.endpoint(e, 0), q = t.endpoint(e, 1);
  if (p.sw == q.sw) throw Error(ErrorCode::NotFoldable, "branch " + std::to_string(e) + " is a small loop");
  if (p.slot != q.slot)
    throw Error(ErrorCode::NotFoldable, "branch " + std::to_string(e) + " is one-sided");
  const int a = p.sw, b = q.sw, d1 = 2 * e, d2 = 2 * e + 1;
  Moved out{t, {}, {MoveKind::Fold, e, a, b, {e}, {e}, {}}};
  TrainTrack& r = out.track;
  if (p.slot == Slot::SmallLeft) {
    const int al = t.dart_at(a, Slot::Large), ar = t.dart_at(a, Slot::SmallRight);
    const int bl = t.dart_at(b, Slot::Large), brr = t.dart_at(b, Slot::SmallRight);
    rewire(r, a, d1, al, brr);
    rewire(r, b, d2, bl, ar);
    out.record.companions = {br(ar), br(brr)};
  } else {
    const int al = t.dart_at(a, Slot::Large), asl = t.dart_at(a, Slot::SmallLeft);
    const int bl = t.dart_at(b, Slot::Large), bsl = t.dart_at(b, Slot::SmallLeft);
    rewire(r, a, d1, bsl, al);
    rewire(r, b, d2, asl, bl);
    out.record.companions = {br(asl), br(bsl)};
  }
  swap_cusp_flags(r, a, b);
  return out;
}

Moved fold(const TrainTrack& t, const Measure& mu, int e) {
  Moved out = fold(t, e);
  out.measure = mu;
  out.measure[e] = mu[e] + mu[out.record.companions[0]] + mu[out.record.companions[1]];
  return out;
}

Moved shift(const TrainTrack& t, int b) {
  if (b < 0 || b >= t.num_branches()) throw std::out_of_range("no branch " + std::to_string(b));
  if (classify_branch(t, b) != BranchType::Mixed) throw Error(ErrorCode::NotMixed, "branch " + std::to_string(b));
  const int large_end = t.endpoint(b, 0).slot == Slot::Large ? 0 : 1;
  const Endpoint ue = t.endpoint(b, large_end), ve = t.endpoint(b, 1 - large_end);
  const int u = ue.sw, v = ve.sw;
  if (u == v) throw Error(ErrorCode::NotMixed, "branch " + std::to_string(b) + " is a loop");
  const int bu = 2 * b + large_end, bv = 2 * b + 1 - large_end;
  const int r = t.dart_at(v, Slot::Large);
  const int p = t.dart_at(u, Slot::SmallLeft), q = t.dart_at(u, Slot::SmallRight);
  Moved out{t, {}, {MoveKind::Shift, b, t.endpoint(b, 0).sw, t.endpoint(b, 1).sw, {b}, {b}, {}}};
  if (ve.slot == Slot::SmallLeft) {
    const int w = t.dart_at(v, Slot::SmallRight);
    rewire(out.track, v, r, p, bv);
    rewire(out.track, u, bu, q, w);
    out.record.companions = {br(q), br(w)};
  } else {
    const int w = t.dart_at(v, Slot::SmallLeft);
    rewire(out.track, v, r, bv, q);
    rewire(out.track, u, bu, w, p);
    out.record.companions = {br(w), br(p)};
  }
  swap_cusp_flags(out.track, u, v);
  return out;
}

Moved shift(const TrainTrack& t, const Measure& mu, int b) {
  Moved out = shift(t, b);
  out.measure = mu;
  out.measure[b] = mu[out.record.companions[0]] + mu[out.record.companions[1]];
  return out;
}

algebra::IntegerMatrix fold_matrix(int branches, const MoveRecord& rec) {
  auto m = algebra::IntegerMatrix::identity(static_cast<std::size_t>(branches));
  for (int c : rec.companions) m(rec.branch, c) += 1;
  return m;
}

std::vector<int> maximal_branches(const Measure& mu) {
  std::vector<int> best;
  for (int b = 0; b < static_cast<int>(mu.size()); ++b) {
    if (best.empty()) {
      best.push_back(b);
      continue;
    }
    Ordering o = compare(mu[b], mu[best.front()]);
    if (o == Ordering::Greater) best.assign(1, b);
    else if (o == Ordering::Equal) best.push_back(b);
  }
  return best;
}

BatchResult maximal_split(const TrainTrack& t, const Measure& mu) {
  BatchResult out{t, mu, {}};
  for (int e : maximal_branches(mu)) {
    if (classify_branch(t, e) != BranchType::Large)
      throw std::logic_error("maximal-weight branch " + std::to_string(e) + " is not large");
    try {
      Moved m = split(out.track, out.measure, e);
      out.track = std::move(m.track);
      out.measure = std::move(m.measure);
      out.batch.push_back(std::move(m.record));
    } catch (const Error& err) {
      if (err.code() == ErrorCode::CentralSplit)
        throw Error(ErrorCode::CentralSplitInBatch, "branch " + std::to_string(e));
      throw;
    }
  }
  return out;
}

}  // namespace veer::moves
