#include "veer/track/train_track.hpp"

#include "veer/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace veer::track {

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::Large: return "L";
    case Slot::SmallLeft: return "SL";
    case Slot::SmallRight: return "SR";
  }
  return "?";
}

std::optional<Slot> parse_slot(const std::string& s) {
  if (s == "L") return Slot::Large;
  if (s == "SL") return Slot::SmallLeft;
  if (s == "SR") return Slot::SmallRight;
  return std::nullopt;
}

const char* branch_type_name(BranchType t) {
  switch (t) {
    case BranchType::Large: return "large";
    case BranchType::Mixed: return "mixed";
    case BranchType::Small: return "small";
  }
  return "?";
}

TrainTrack::TrainTrack(int switches, int branches)
    : slots_(switches, std::array<int, 3>{-1, -1, -1}),
      ends_(2 * branches),
      cusp_punctured_(switches, 0),
      labels_(branches) {}

void TrainTrack::attach(int dart, int sw, Slot s) {
  slots_[sw][index(s)] = dart;
  ends_[dart] = Endpoint{sw, s};
}

void TrainTrack::connect(int b, Endpoint a, Endpoint c) {
  attach(2 * b, a.sw, a.slot);
  attach(2 * b + 1, c.sw, c.slot);
}

bool TrainTrack::is_complete() const {
  std::vector<int> seen(ends_.size(), 0);
  for (int s = 0; s < num_switches(); ++s)
    for (int k = 0; k < 3; ++k) {
      int d = slots_[s][k];
      if (d < 0 || d >= static_cast<int>(ends_.size())) return false;
      if (ends_[d].sw != s || index(ends_[d].slot) != k) return false;
      ++seen[d];
    }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

bool TrainTrack::is_connected() const {
  if (num_switches() == 0) return true;
  std::vector<char> seen(num_switches(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int k = 0; k < 3; ++k) {
      int t = ends_[other_end(slots_[s][k])].sw;
      if (!seen[t]) {
        seen[t] = 1;
        ++count;
        stack.push_back(t);
      }
    }
  }
  return count == num_switches();
}

std::vector<Region> TrainTrack::regions() const {
  std::vector<Region> out;
  std::vector<char> used(ends_.size(), 0);
  for (int start = 0; start < static_cast<int>(ends_.size()); ++start) {
    if (used[start]) continue;
    Region r;
    bool any_flag = false;
    int h = start;
    do {
      used[h] = 1;
      r.boundary.push_back(h);
      const Endpoint& arrive = ends_[other_end(h)];
      Slot next = ccw_next(arrive.slot);
      int vertex = index(ccw_next(next));
      r.corners.emplace_back(arrive.sw, vertex);
      if (arrive.slot == Slot::SmallRight) {
        ++r.cusps;
        any_flag = any_flag || cusp_punctured_[arrive.sw];
      }
      h = slots_[arrive.sw][index(next)];
    } while (h != start);
    r.punctured = any_flag;
    out.push_back(std::move(r));
  }
  return out;
}

void TrainTrack::puncture_region(int region_index) {
  auto rs = regions();
  if (region_index < 0 || region_index >= static_cast<int>(rs.size()))
    throw std::out_of_range("no region " + std::to_string(region_index));
  for (auto [sw, vertex] : rs[region_index].corners)
    if (vertex == 0) cusp_punctured_[sw] = 1;
}

void TrainTrack::puncture_all() { std::fill(cusp_punctured_.begin(), cusp_punctured_.end(), 1); }

BranchType classify_branch(const TrainTrack& t, int b) {
  bool l0 = t.endpoint(b, 0).slot == Slot::Large;
  bool l1 = t.endpoint(b, 1).slot == Slot::Large;
  if (l0 && l1) return BranchType::Large;
  if (!l0 && !l1) return BranchType::Small;
  return BranchType::Mixed;
}

SurfaceSummary validate(const TrainTrack& t) {
  if (t.num_switches() == 0) throw Error(ErrorCode::IncompleteTrack, "track has no switches");
  if (2 * t.num_branches() != 3 * t.num_switches())
    throw Error(ErrorCode::IncompleteTrack, "trivalent track needs 3 * switches = 2 * branches");
  if (!t.is_complete()) throw Error(ErrorCode::IncompleteTrack, "some slot is empty or some half-branch is unplaced");
  if (!t.is_connected()) throw Error(ErrorCode::IncompleteTrack, "track is not connected");

  SurfaceSummary s;
  s.regions = t.regions();
  int faces = static_cast<int>(s.regions.size());
  int chi_regions = 0;
  for (std::size_t i = 0; i < s.regions.size(); ++i) {
    const Region& r = s.regions[i];
    int chi = r.punctured ? 0 : 1;
    chi_regions += chi;
    if (r.punctured) ++s.punctures;
    if (2 * chi - r.cusps >= 0) {
      std::ostringstream os;
      os << "region " << i << " is a " << (r.punctured ? "punctured " : "") << "disk with " << r.cusps
         << " cusp" << (r.cusps == 1 ? "" : "s") << " (needs " << (r.punctured ? 1 : 3) << ")";
      throw Error(ErrorCode::IllegalRegion, os.str());
    }
  }
  int closed_chi = t.num_switches() - t.num_branches() + faces;
  s.genus = (2 - closed_chi) / 2;
  s.euler_characteristic = t.num_switches() - t.num_branches() + chi_regions;
  if (s.euler_characteristic != 2 - 2 * s.genus - s.punctures)
    throw std::logic_error("Euler characteristic bookkeeping failed");
  return s;
}

std::vector<ExcludedViolation> check_excluded(const TrainTrack& t) {
  std::vector<ExcludedViolation> out;
  for (int b = 0; b < t.num_branches(); ++b) {
    if (classify_branch(t, b) != BranchType::Small) continue;
    Endpoint p = t.endpoint(b, 0), q = t.endpoint(b, 1);
    if (p.sw == q.sw)
      out.push_back({ExcludedViolation::Kind::IsolatedMonogon, b});
    else if (p.slot != q.slot)
      out.push_back({ExcludedViolation::Kind::OneSidedSmallBranch, b});
  }
  return out;
}

void validate_measure(const TrainTrack& t, const Measure& mu) {
  if (static_cast<int>(mu.size()) != t.num_branches())
    throw std::invalid_argument("measure has " + std::to_string(mu.size()) + " weights for " +
                                std::to_string(t.num_branches()) + " branches");
  for (int b = 0; b < t.num_branches(); ++b)
    if (mu[b].sign() <= 0) throw Error(ErrorCode::NonpositiveWeight, "branch " + std::to_string(b));
  for (int s = 0; s < t.num_switches(); ++s) {
    const auto& l = mu[TrainTrack::branch_of(t.dart_at(s, Slot::Large))];
    const auto& a = mu[TrainTrack::branch_of(t.dart_at(s, Slot::SmallLeft))];
    const auto& c = mu[TrainTrack::branch_of(t.dart_at(s, Slot::SmallRight))];
    if (!(l - a - c).is_zero()) throw Error(ErrorCode::SwitchViolation, "switch " + std::to_string(s));
  }
}

int branch_bound(int genus, int punctures, bool* degenerate) {
  if (genus < 0 || punctures < 0) throw Error(ErrorCode::BadParameters, "negative genus or puncture count");
  if (2 - 2 * genus - punctures >= 0)
    throw Error(ErrorCode::NotHyperbolic, "Euler characteristic " + std::to_string(2 - 2 * genus - punctures) + " >= 0");
  int e = 18 * genus - 18 + 6 * punctures;
  if (degenerate) *degenerate = e <= 0;
  return e;
}

MaximalTrackCounts maximal_track_counts(int genus, int punctures) {
  int e = branch_bound(genus, punctures);
  return {2 * e / 3, e, 4 * genus - 4 + punctures};
}

}  // namespace veer::track
