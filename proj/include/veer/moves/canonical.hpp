#pragma once

#include "veer/track/train_track.hpp"

#include <optional>
#include <string>
#include <vector>

namespace veer::moves {

using track::Measure;
using track::TrainTrack;

/// Canonical key of a (projectively) measured track under slot-preserving
/// relabelings. A relabeling is fixed by where one switch goes, so the key is
/// the least breadth-first serialization over all root switches.
struct CanonicalForm {
  std::vector<int> structure;        // gluing table and puncture flags
  std::vector<std::string> weights;  // normalized by the first branch; empty if unmeasured

  /// Relabeling realizing the key: canonical position -> original id.
  std::vector<int> switch_order;
  std::vector<int> branch_order;
  /// Every root switch attaining the key (one per automorphism).
  std::vector<int> roots;

  bool same_key(const CanonicalForm& o) const { return structure == o.structure && weights == o.weights; }
  std::string to_string() const;
};

CanonicalForm canonical_form(const TrainTrack& t, const std::optional<Measure>& mu = std::nullopt);

/// Slot-preserving isomorphism between two tracks, by switch and by branch.
struct TrackIsomorphism {
  std::vector<int> switch_map;  // source switch -> target switch
  std::vector<int> branch_map;  // source branch -> target branch
  /// Branch b's end 0 lands on end `flip[b]` of branch_map[b].
  std::vector<int> flip;
};

/// Composes the canonical relabelings of two forms with equal keys into an
/// isomorphism from the first track onto the second.
TrackIsomorphism isomorphism_between(const TrainTrack& from, const CanonicalForm& f, const TrainTrack& to,
                                     const CanonicalForm& g);

/// Serialization from one root switch; exposed for tests.
CanonicalForm serialize_from(const TrainTrack& t, const std::optional<Measure>& mu, int root);

}  // namespace veer::moves
