#pragma once

#include "veer/track/train_track.hpp"

#include <array>
#include <string>
#include <vector>

namespace veer::track {

/// Ideal triangulation of an oriented punctured surface. Triangle slots are
/// listed counterclockwise; vertex k of a triangle is the corner opposite
/// slot k. Gluing an edge between (t1, k1) and (t2, k2) identifies vertex
/// k1+1 of t1 with vertex k2+2 of t2 and vice versa (indices mod 3), which is
/// the only orientation-compatible way.
struct IdealTriangulation2 {
  struct Side {
    int tri = -1;
    int slot = -1;
    friend bool operator==(const Side&, const Side&) = default;
  };

  std::vector<std::array<int, 3>> triangles;  // edge id per slot
  std::vector<std::array<Side, 2>> edges;
  std::vector<std::string> labels;  // per edge

  int num_triangles() const { return static_cast<int>(triangles.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  /// Vertex class (puncture) of each corner, indexed [tri][vertex].
  std::vector<std::array<int, 3>> vertex_classes() const;
  int num_vertices() const;
  /// Genus of the filled-in closed surface from V - E + T.
  int genus() const;

  /// Every slot used exactly once and the edge table agrees with the
  /// triangle table. Throws std::logic_error otherwise.
  void check_consistency() const;

  friend bool operator==(const IdealTriangulation2&, const IdealTriangulation2&) = default;
};

/// One triangle per switch (slot order carried over), one edge per branch.
/// Throws NotFullyPunctured if some region is an unpunctured polygon.
IdealTriangulation2 dual_triangulation(const TrainTrack& t);

/// Inverse of dual_triangulation: switch per triangle with slot k of the
/// triangle as slot k of the switch, branch per edge, every region punctured.
TrainTrack track_from_triangulation(const IdealTriangulation2& tri);

}  // namespace veer::track
