#pragma once

#include "veer/taut/fiber.hpp"
#include "veer/taut/triangulation.hpp"

#include <string>

namespace veer::taut {

/// Canonical serialization of a taut triangulation with a face cycle: the
/// lexicographically least breadth-first encoding over every choice of
/// starting tetrahedron and vertex labelling (all 24, so mirror images get
/// the same key). Cycle weights are scaled to coprime integers first, so
/// proportional cycles give equal keys.
struct ConjugacyKey {
  std::string text;
  std::string digest() const;  // 64-bit FNV-1a of `text`, hex

  friend bool operator==(const ConjugacyKey&, const ConjugacyKey&) = default;
};

ConjugacyKey conjugacy_key(const TautTriangulation3& t, const FiberCycle& c);
bool compare_conjugacy(const ConjugacyKey& a, const ConjugacyKey& b);

}  // namespace veer::taut
