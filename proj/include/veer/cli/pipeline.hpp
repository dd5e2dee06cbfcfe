#pragma once

#include "veer/bounds/bounds.hpp"
#include "veer/moves/sequence.hpp"
#include "veer/taut/conjugacy.hpp"
#include "veer/taut/fiber.hpp"
#include "veer/taut/layered.hpp"
#include "veer/taut/triangulation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace veer::cli {

inline constexpr const char* kRunReportSchema = "veer.run-report/1";

struct PipelineOptions {
  int max_steps = 10000;
  int period_multiple = 1;
  unsigned precision_bits = 64;
  /// Re-close the layering with every automorphism of the period-start
  /// track and compare the conjugacy keys.
  bool check_alternatives = true;
  bool timing = true;
};

/// Closing by one automorphism of the period-start track.
struct AlternativeClosing {
  std::vector<int> switch_map;
  std::string digest;  // empty if this closing gave no taut complex
  std::string error;
};

struct PipelineResult {
  std::string input;
  moves::RunResult run;
  taut::TautTriangulation3 tri;
  taut::LayeredStructure layers;
  taut::VeeringResult veering;
  bool reverse_veering = false;
  int edges = 0;
  int cusps = 0;
  taut::FiberCycle fiber;
  taut::ConjugacyKey key;
  bounds::BoundReport bounds;
  std::vector<AlternativeClosing> alternatives;
  bool alternatives_agree = true;
  double seconds = 0;
};

/// Splitting sequence, certificate, layered triangulation, veering check,
/// fiber cycle, conjugacy key and the bound check. Domain failures propagate
/// as veer::Error; a run with no period within max_steps throws NoPeriod.
PipelineResult run_pipeline(const track::TrainTrack& t, const track::Measure& mu, const std::string& input,
                            const PipelineOptions& opts = {});
/// Seeds the punctured torus from `word` and certifies a period of |word| steps.
PipelineResult run_word(const std::string& word, PipelineOptions opts = {});

/// Number of different conjugacy keys among the alternative closings. Above 1
/// means the period-start track has automorphisms that change the monodromy
/// (on the punctured torus, the elliptic involution).
int distinct_keys(const PipelineResult& r);

/// Exact value with its decimal rendering.
nlohmann::json exact_json(const algebra::AlgebraicNumber& x, unsigned bits);
nlohmann::json interval_json(const algebra::RatInterval& iv, int digits);
nlohmann::json bounds_json(const bounds::BoundReport& b, unsigned bits);
nlohmann::json report_json(const PipelineResult& r, const PipelineOptions& opts = {});

}  // namespace veer::cli
