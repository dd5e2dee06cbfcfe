#pragma once

#include "veer/algebra/matrix.hpp"
#include "veer/track/train_track.hpp"

#include <vector>

namespace veer::moves {

using track::Measure;
using track::TrainTrack;

enum class MoveKind { SplitLeft, SplitRight, Fold, Shift };
const char* move_kind_name(MoveKind k);

/// One elementary move. Branch and switch ids are stable: the branch created
/// by a split or fold reuses the index of the one it replaces, so `created`
/// and `destroyed` both hold `branch` and the relabeling is the identity.
struct MoveRecord {
  MoveKind kind;
  int branch;
  /// Switches at end 0 and end 1 of the moved branch (before the move).
  int switch0;
  int switch1;
  std::vector<int> created;
  std::vector<int> destroyed;
  /// Branches whose weights are added into `branch` when the move is undone
  /// by a fold (splits) or are added by the fold itself (folds).
  std::vector<int> companions;
};

struct Moved {
  TrainTrack track;
  Measure measure;  // empty for combinatorial moves
  MoveRecord record;
};

/// Split the large branch e. With NW, SW the small neighbours at end 0
/// (slots SR, SL) and NE, SE at end 1 (slots SL, SR): SplitLeft when
/// mu(NW) < mu(NE), giving the new branch weight mu(NE) - mu(NW); SplitRight
/// mirrors it. Throws NotLarge or CentralSplit.
Moved split(const TrainTrack& t, const Measure& mu, int e);
/// Combinatorial split with an explicit parity.
Moved split(const TrainTrack& t, int e, MoveKind parity);

/// Fold the small branch e (inverse of a split). Both ends must sit in the
/// same kind of small slot at distinct switches. Throws NotSmall or NotFoldable.
Moved fold(const TrainTrack& t, int e);
Moved fold(const TrainTrack& t, const Measure& mu, int e);

/// Shift the mixed branch b past the small branches at its large end.
/// Self-inverse. Throws NotMixed.
Moved shift(const TrainTrack& t, int b);
Moved shift(const TrainTrack& t, const Measure& mu, int b);

/// Elementary matrix of a fold on `branches` coordinates: identity plus one
/// unit per companion in row `branch`. Maps the weights after a split back
/// to the weights before it.
algebra::IntegerMatrix fold_matrix(int branches, const MoveRecord& split_record);

struct BatchResult {
  TrainTrack track;
  Measure measure;
  std::vector<MoveRecord> batch;
};

/// Branches of maximal weight, ascending.
std::vector<int> maximal_branches(const Measure& mu);

/// Split every branch of maximal weight, in ascending id order. Throws
/// CentralSplitInBatch naming the offending branch.
BatchResult maximal_split(const TrainTrack& t, const Measure& mu);

}  // namespace veer::moves
