#pragma once

#include "veer/algebra/matrix.hpp"
#include "veer/moves/canonical.hpp"
#include "veer/moves/moves.hpp"

#include <optional>
#include <string>
#include <vector>

namespace veer::moves {

/// States 0..k and the batch carrying state i to state i+1.
struct SplittingSequence {
  std::vector<TrainTrack> tracks;
  std::vector<Measure> measures;
  std::vector<std::vector<MoveRecord>> batches;

  int steps() const { return static_cast<int>(batches.size()); }
};

/// State n + m is state n relabeled by `iso` with its measure scaled by
/// `scale`: mu_{n+m}(iso(b)) = scale * mu_n(b).
struct PeriodicityCertificate {
  int n = 0;
  int m = 0;  // maximal-split steps per period
  int splits = 0;  // individual splits per period (tetrahedra)
  TrackIsomorphism iso;
  algebra::AlgebraicNumber scale;
  /// Transition matrix of the period and its Perron-Frobenius data.
  algebra::IntegerMatrix transition;
  algebra::PerronFrobenius pf;
};

struct RunResult {
  SplittingSequence sequence;
  std::optional<PeriodicityCertificate> certificate;
};

/// Iterate maximal splits until the projective canonical form repeats or
/// `max_steps` steps have been taken. A certificate is checked exactly
/// before it is returned (scale * lambda = 1, every branch split in the
/// period, PF vector proportional to the period-start measure).
/// `period_multiple` stretches the certified period to a multiple of the
/// given step count, for inputs known to be a power of a shorter period.
RunResult run_sequence(const TrainTrack& t, const Measure& mu, int max_steps = 10000, int period_multiple = 1);

/// Product of fold matrices over steps [n, n + m) followed by the relabeling
/// matrix of `iso`; its PF eigenvector is the measure at step n.
algebra::IntegerMatrix transition_matrix(const SplittingSequence& seq, int n, int m, const TrackIsomorphism& iso);

/// Fold matrices of each split in steps [n, n + m), in order.
std::vector<algebra::IntegerMatrix> fold_factors(const SplittingSequence& seq, int n, int m);

/// Line-oriented dump: `step <i> | batch <ids+parity> | weights <b>:<poly>...`
/// then `period n=<n> m=<m> scale=<poly> iso=<b>:<b'>...`. Polynomials are
/// comma-joined coefficient lists.
std::string dump_sequence(const RunResult& run);

/// Structured view of a dump, for round trips.
struct SequenceDump {
  struct Step {
    int index;
    std::vector<std::string> batch;
    std::vector<std::pair<int, std::string>> weights;
  };
  std::vector<Step> steps;
  struct Period {
    int n, m;
    std::string scale;
    std::vector<std::pair<int, int>> iso;
  };
  std::optional<Period> period;
};
SequenceDump parse_sequence_dump(const std::string& text);
std::string write_sequence_dump(const SequenceDump& d);

}  // namespace veer::moves
