#pragma once

#include "veer/algebra/matrix.hpp"
#include "veer/track/train_track.hpp"

#include <string>

namespace veer::cli {

/// Elementary matrices acting on (mu(b), mu(c)) of the punctured torus track:
/// R = [[1,1],[0,1]], L = [[1,0],[1,1]].
algebra::IntegerMatrix word_matrix(const std::string& word);

struct Seed {
  track::TrainTrack track;
  track::Measure measure;
  algebra::PerronFrobenius pf;
};

/// Once-punctured torus track carrying the PF eigenvector of the word's
/// matrix product. Maximal splitting then replays the word: R splits left,
/// L splits right. Throws NotPseudoAnosov unless both letters occur and
/// BadParameters on other characters.
Seed seed_punctured_torus(const std::string& word);

}  // namespace veer::cli
