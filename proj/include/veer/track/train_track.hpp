#pragma once

#include "veer/algebra/number_field.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace veer::track {

using algebra::AlgebraicNumber;

/// Half-branch slots at a trivalent switch. Orient the switch so its
/// tangent points from the large side to the small side; SmallLeft is the
/// small half-branch on the left of that direction for the surface
/// orientation. Counterclockwise around the switch the slots read
/// Large, SmallRight, SmallLeft.
enum class Slot : std::uint8_t { Large = 0, SmallLeft = 1, SmallRight = 2 };

constexpr int index(Slot s) { return static_cast<int>(s); }
constexpr Slot slot_from_index(int i) { return static_cast<Slot>(i); }
/// Next slot counterclockwise.
constexpr Slot ccw_next(Slot s) {
  switch (s) {
    case Slot::Large: return Slot::SmallRight;
    case Slot::SmallRight: return Slot::SmallLeft;
    case Slot::SmallLeft: return Slot::Large;
  }
  return Slot::Large;
}
const char* slot_name(Slot s);  // "L", "SL", "SR"
std::optional<Slot> parse_slot(const std::string& s);

struct Endpoint {
  int sw = -1;
  Slot slot = Slot::Large;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

enum class BranchType { Large, Mixed, Small };
const char* branch_type_name(BranchType t);

/// One complementary region: boundary darts in traversal order, cusp count,
/// and whether the region carries a puncture.
struct Region {
  std::vector<int> boundary;  // darts; each is one side of a branch
  int cusps = 0;
  bool punctured = false;
  /// Corners of the dual triangles meeting this region: (switch, vertex)
  /// with vertex k opposite slot k.
  std::vector<std::pair<int, int>> corners;
};

struct SurfaceSummary {
  int genus = 0;
  int punctures = 0;
  int euler_characteristic = 0;
  std::vector<Region> regions;
};

/// Embedded trivalent train track encoded as a fat graph. Branch b owns
/// darts 2b and 2b+1; each switch holds one dart per slot. Punctures live on
/// complementary regions and are recorded on the cusp of every switch that
/// faces a punctured region, which lets moves carry them along.
class TrainTrack {
 public:
  TrainTrack() = default;
  TrainTrack(int switches, int branches);

  int num_switches() const { return static_cast<int>(slots_.size()); }
  int num_branches() const { return static_cast<int>(ends_.size() / 2); }

  static int branch_of(int dart) { return dart / 2; }
  static int other_end(int dart) { return dart ^ 1; }

  int dart_at(int sw, Slot s) const { return slots_[sw][index(s)]; }
  const Endpoint& endpoint(int dart) const { return ends_[dart]; }
  Endpoint endpoint(int branch, int end) const { return ends_[2 * branch + end]; }

  /// Place `dart` in slot `s` of switch `sw` (overwrites the slot).
  void attach(int dart, int sw, Slot s);
  /// Connect branch `b` between two switch slots.
  void connect(int b, Endpoint a, Endpoint c);

  bool cusp_punctured(int sw) const { return cusp_punctured_[sw] != 0; }
  void set_cusp_punctured(int sw, bool value) { cusp_punctured_[sw] = value ? 1 : 0; }

  const std::string& label(int b) const { return labels_[b]; }
  void set_label(int b, std::string label) { labels_[b] = std::move(label); }

  /// All slots filled and every dart placed exactly once.
  bool is_complete() const;
  bool is_connected() const;

  /// Complementary regions by boundary traversal, ordered by their smallest
  /// boundary dart. Requires a complete track.
  std::vector<Region> regions() const;

  /// Mark the region with the given index (in regions() order) punctured.
  void puncture_region(int region_index);
  /// Puncture every unpunctured region (passing to the punctured surface).
  void puncture_all();

  friend bool operator==(const TrainTrack&, const TrainTrack&) = default;

 private:
  std::vector<std::array<int, 3>> slots_;
  std::vector<Endpoint> ends_;
  std::vector<char> cusp_punctured_;
  std::vector<std::string> labels_;
};

/// Positive branch weights, one per branch, in a common field.
struct Measure {
  std::vector<AlgebraicNumber> weights;

  const AlgebraicNumber& operator[](int b) const { return weights[b]; }
  AlgebraicNumber& operator[](int b) { return weights[b]; }
  std::size_t size() const { return weights.size(); }
};

BranchType classify_branch(const TrainTrack& t, int b);

/// Throws IncompleteTrack or IllegalRegion.
SurfaceSummary validate(const TrainTrack& t);

struct ExcludedViolation {
  enum class Kind { OneSidedSmallBranch, IsolatedMonogon } kind;
  int branch;
};

/// Small branches that can never be folded away: one-sided small branches
/// (companions on the same side) and small loops bounding a monogon.
std::vector<ExcludedViolation> check_excluded(const TrainTrack& t);

/// Throws SwitchViolation or NonpositiveWeight.
void validate_measure(const TrainTrack& t, const Measure& mu);

/// 18g - 18 + 6n, the branch count of a maximal track. Throws NotHyperbolic.
/// Sets `degenerate` when the surface admits no filling track (the value is 0).
int branch_bound(int genus, int punctures, bool* degenerate = nullptr);

/// Switch and trigon counts of a maximal track (only trigons and punctured
/// monogons): v = n + 3t and 3v = 2e.
struct MaximalTrackCounts {
  int switches;
  int branches;
  int trigons;
};
MaximalTrackCounts maximal_track_counts(int genus, int punctures);

}  // namespace veer::track
