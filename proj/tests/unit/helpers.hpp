#pragma once

#include "veer/error.hpp"
#include "veer/track/generate.hpp"
#include "veer/track/train_track.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace testing {

using veer::track::Endpoint;
using veer::track::Measure;
using veer::track::Slot;
using veer::track::TrainTrack;

/// Puncture regions with fewer than three cusps, leave the rest as polygons.
inline void puncture_small_regions(TrainTrack& t) {
  auto regions = t.regions();
  for (std::size_t r = 0; r < regions.size(); ++r)
    if (regions[r].cusps < 3) t.puncture_region(static_cast<int>(r));
}

/// Connected random tracks passing validate. With `all_punctured` every
/// region is punctured; otherwise only the ones that must be.
inline std::vector<TrainTrack> random_valid_tracks(int switches, int want, unsigned seed, bool all_punctured = true) {
  std::mt19937_64 rng(seed);
  std::vector<TrainTrack> out;
  for (int tries = 0; tries < 50000 && static_cast<int>(out.size()) < want; ++tries) {
    TrainTrack t = veer::track::random_fat_graph(switches, rng);
    if (!t.is_connected()) continue;
    if (all_punctured) t.puncture_all();
    else puncture_small_regions(t);
    try {
      veer::track::validate(t);
      out.push_back(std::move(t));
    } catch (const veer::Error&) {
    }
  }
  return out;
}

/// Every positive integer measure with weights in [1, max_weight], found by
/// depth-first assignment with switch pruning. Stops after `limit` results.
inline std::vector<std::vector<int>> integer_measures(const TrainTrack& t, int max_weight, std::size_t limit = 1000) {
  const int e = t.num_branches();
  std::vector<int> w(e, 0);
  std::vector<std::vector<int>> out;
  auto consistent = [&] {
    for (int s = 0; s < t.num_switches(); ++s) {
      int l = w[TrainTrack::branch_of(t.dart_at(s, Slot::Large))];
      int a = w[TrainTrack::branch_of(t.dart_at(s, Slot::SmallLeft))];
      int c = w[TrainTrack::branch_of(t.dart_at(s, Slot::SmallRight))];
      if (l && a && c && l != a + c) return false;
    }
    return true;
  };
  std::function<void(int)> go = [&](int b) {
    if (out.size() >= limit) return;
    if (b == e) {
      out.push_back(w);
      return;
    }
    for (int v = 1; v <= max_weight; ++v) {
      w[b] = v;
      if (consistent()) go(b + 1);
    }
    w[b] = 0;
  };
  go(0);
  return out;
}

inline Measure rational_measure(const std::vector<int>& w) {
  Measure mu;
  auto q = veer::algebra::NumberField::rationals();
  for (int x : w) mu.weights.emplace_back(q, mpq_class(x));
  return mu;
}

struct Relabeled {
  TrainTrack track;
  Measure measure;
};

/// Random slot-preserving relabeling of switches, branches and branch ends.
inline Relabeled random_relabel(const TrainTrack& t, const Measure& mu, std::mt19937_64& rng) {
  const int nsw = t.num_switches(), nbr = t.num_branches();
  std::vector<int> sp(nsw), bp(nbr);
  std::iota(sp.begin(), sp.end(), 0);
  std::iota(bp.begin(), bp.end(), 0);
  std::shuffle(sp.begin(), sp.end(), rng);
  std::shuffle(bp.begin(), bp.end(), rng);
  Relabeled r{TrainTrack(nsw, nbr), mu};
  for (int b = 0; b < nbr; ++b) {
    Endpoint p = t.endpoint(b, 0), q = t.endpoint(b, 1);
    p.sw = sp[p.sw];
    q.sw = sp[q.sw];
    if (rng() % 2) std::swap(p, q);
    r.track.connect(bp[b], p, q);
    r.track.set_label(bp[b], t.label(b));
    if (!mu.weights.empty()) r.measure[bp[b]] = mu[b];
  }
  for (int s = 0; s < nsw; ++s) r.track.set_cusp_punctured(sp[s], t.cusp_punctured(s));
  return r;
}

}  // namespace testing
