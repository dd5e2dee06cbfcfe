#include "veer/moves/canonical.hpp"

#include <sstream>
#include <stdexcept>

namespace veer::moves {

using track::Slot;
using track::slot_from_index;

CanonicalForm serialize_from(const TrainTrack& t, const std::optional<Measure>& mu, int root) {
  const int nsw = t.num_switches(), nbr = t.num_branches();
  CanonicalForm f;
  std::vector<int> sw_num(nsw, -1), br_num(nbr, -1);
  f.switch_order.reserve(nsw);
  f.branch_order.reserve(nbr);
  sw_num[root] = 0;
  f.switch_order.push_back(root);
  f.structure.reserve(6 * nsw + nsw);
  for (std::size_t head = 0; head < f.switch_order.size(); ++head) {
    int s = f.switch_order[head];
    for (int k = 0; k < 3; ++k) {
      int d = t.dart_at(s, slot_from_index(k));
      int b = TrainTrack::branch_of(d);
      if (br_num[b] < 0) {
        br_num[b] = static_cast<int>(f.branch_order.size());
        f.branch_order.push_back(b);
      }
      auto far = t.endpoint(TrainTrack::other_end(d));
      if (sw_num[far.sw] < 0) {
        sw_num[far.sw] = static_cast<int>(f.switch_order.size());
        f.switch_order.push_back(far.sw);
      }
      f.structure.push_back(sw_num[far.sw]);
      f.structure.push_back(track::index(far.slot));
    }
  }
  if (static_cast<int>(f.switch_order.size()) != nsw) throw std::invalid_argument("track is not connected");
  for (int s : f.switch_order) f.structure.push_back(t.cusp_punctured(s) ? 1 : 0);
  if (mu) {
    auto inv = (*mu)[f.branch_order[0]].inverse();
    f.weights.reserve(nbr);
    for (int b : f.branch_order) f.weights.push_back(((*mu)[b] * inv).to_string());
  }
  return f;
}

CanonicalForm canonical_form(const TrainTrack& t, const std::optional<Measure>& mu) {
  CanonicalForm best;
  bool have = false;
  for (int root = 0; root < t.num_switches(); ++root) {
    CanonicalForm f = serialize_from(t, mu, root);
    if (!have) {
      best = std::move(f);
      best.roots = {root};
      have = true;
      continue;
    }
    if (f.structure < best.structure || (f.structure == best.structure && f.weights < best.weights)) {
      best = std::move(f);
      best.roots = {root};
    } else if (f.same_key(best)) {
      best.roots.push_back(root);
    }
  }
  return best;
}

std::string CanonicalForm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < structure.size(); ++i) os << (i ? "," : "") << structure[i];
  for (const auto& w : weights) os << '|' << w;
  return os.str();
}

TrackIsomorphism isomorphism_between(const TrainTrack& from, const CanonicalForm& f, const TrainTrack& to,
                                     const CanonicalForm& g) {
  if (!f.same_key(g)) throw std::invalid_argument("canonical keys differ");
  TrackIsomorphism iso;
  iso.switch_map.assign(from.num_switches(), -1);
  iso.branch_map.assign(from.num_branches(), -1);
  iso.flip.assign(from.num_branches(), 0);
  for (std::size_t i = 0; i < f.switch_order.size(); ++i) iso.switch_map[f.switch_order[i]] = g.switch_order[i];
  for (std::size_t i = 0; i < f.branch_order.size(); ++i) iso.branch_map[f.branch_order[i]] = g.branch_order[i];
  for (int b = 0; b < from.num_branches(); ++b) {
    auto e0 = from.endpoint(b, 0);
    auto image = to.endpoint(iso.branch_map[b], 0);
    iso.flip[b] = (image.sw == iso.switch_map[e0.sw] && image.slot == e0.slot) ? 0 : 1;
  }
  return iso;
}

}  // namespace veer::moves
