#pragma once

#include "veer/track/train_track.hpp"

#include <random>

namespace veer::track {

/// Random trivalent fat graph with `switches` switches (must be even): the
/// 3v slots are paired uniformly at random. No validity is promised.
TrainTrack random_fat_graph(int switches, std::mt19937_64& rng);

/// The once-punctured torus track: switches 0 and 1, large branch 0 and
/// small branches 1 (SL at both ends) and 2 (SR at both ends).
TrainTrack punctured_torus_track();

}  // namespace veer::track
