#include "veer/cli/seed.hpp"

#include "veer/error.hpp"
#include "veer/track/generate.hpp"

namespace veer::cli {

algebra::IntegerMatrix word_matrix(const std::string& word) {
  const algebra::IntegerMatrix r{{1, 1}, {0, 1}}, l{{1, 0}, {1, 1}};
  auto m = algebra::IntegerMatrix::identity(2);
  for (char c : word) {
    if (c == 'R') m = m * r;
    else if (c == 'L') m = m * l;
    else throw Error(ErrorCode::BadParameters, std::string("word letters must be R or L, got '") + c + "'");
  }
  return m;
}

Seed seed_punctured_torus(const std::string& word) {
  auto m = word_matrix(word);
  if (word.find('R') == std::string::npos || word.find('L') == std::string::npos)
    throw Error(ErrorCode::NotPseudoAnosov, "word '" + word + "' needs both R and L");
  Seed s{track::punctured_torus_track(), {}, algebra::pf_eigenpair(m)};
  const auto& v = s.pf.vector;
  s.measure.weights = {v[0] + v[1], v[0], v[1]};
  return s;
}

}  // namespace veer::cli
