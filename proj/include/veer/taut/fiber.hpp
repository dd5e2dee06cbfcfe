#pragma once

#include "veer/taut/layered.hpp"

#include <gmpxx.h>

#include <vector>

namespace veer::taut {

/// Rational weight per face class (numbered as in face_ids()).
struct FiberCycle {
  std::vector<mpq_class> weights;
  int rank = 0;  // rank of the per-tetrahedron system
  int unknowns = 0;
};

/// The fiber class of the layering as the harmonic 2-cycle: start from the
/// bottom layer (weight 1 on each of its faces) and push it across
/// tetrahedra until every tetrahedron has equal weight on its inward and
/// outward faces. The potential is unique up to a constant, so the answer is
/// unique; a rank below N - 1 throws DegenerateSystem.
FiberCycle fiber_cycle(const TautTriangulation3& t, const LayeredStructure& layers);

/// Violations of the cycle conditions: the weights on the two sides of each
/// edge agree, and each tetrahedron's signed face sum vanishes. Empty if valid.
std::vector<std::string> check_cycle(const TautTriangulation3& t, const FiberCycle& c);

}  // namespace veer::taut
