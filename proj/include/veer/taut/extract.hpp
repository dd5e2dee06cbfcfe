#pragma once

#include "veer/algebra/matrix.hpp"
#include "veer/moves/canonical.hpp"
#include "veer/moves/sequence.hpp"
#include "veer/taut/layered.hpp"

#include <optional>
#include <vector>

namespace veer::taut {

/// Train tracks read off a layered veering triangulation. Each layer
/// triangle gets the switch whose large branch crosses the bottom diagonal
/// of the tetrahedron directly above it, in the direction of the
/// coorientation. Layers are listed in flow order, so `sequence` is a
/// splitting sequence whose batches record the folds undoing each step.
struct ExtractedFolding {
  bool reversed = false;  // coorientation runs against the layer order
  moves::SplittingSequence sequence;  // tracks and measures 0..m
  moves::TrackIsomorphism closing;  // flow layer 0 -> flow layer m (branch map only)
  algebra::IntegerMatrix transition;
  algebra::PerronFrobenius pf;
  std::vector<moves::CanonicalForm> forms;  // layers 0..m-1 with their measures
};

/// Throws VeeringRequired if T is not veering. With `lambda` given the
/// measures live in its field (useful for comparing with a known sequence).
ExtractedFolding extract_folding(const TautTriangulation3& t, const LayeredStructure& layers,
                                 const std::optional<algebra::AlgebraicNumber>& lambda = std::nullopt);

}  // namespace veer::taut
