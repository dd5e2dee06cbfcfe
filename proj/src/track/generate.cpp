#include "veer/track/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace veer::track {

TrainTrack random_fat_graph(int switches, std::mt19937_64& rng) {
  if (switches <= 0 || switches % 2) throw std::invalid_argument("a trivalent graph needs an even number of switches");
  std::vector<int> slots(3 * switches);
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  TrainTrack t(switches, 3 * switches / 2);
  for (int b = 0; b < t.num_branches(); ++b) {
    int p = slots[2 * b], q = slots[2 * b + 1];
    t.connect(b, {p / 3, slot_from_index(p % 3)}, {q / 3, slot_from_index(q % 3)});
  }
  return t;
}

TrainTrack punctured_torus_track() {
  TrainTrack t(2, 3);
  t.connect(0, {0, Slot::Large}, {1, Slot::Large});
  t.connect(1, {0, Slot::SmallLeft}, {1, Slot::SmallLeft});
  t.connect(2, {0, Slot::SmallRight}, {1, Slot::SmallRight});
  t.puncture_all();
  return t;
}

}  // namespace veer::track
