#pragma once

#include "veer/moves/moves.hpp"
#include "veer/moves/sequence.hpp"
#include "veer/taut/triangulation.hpp"
#include "veer/track/ideal_triangulation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace veer::taut {

using track::IdealTriangulation2;

/// Diagonal exchange across edge e; the new diagonal keeps e's id and label.
/// Both triangles are rotated so e sits in slot 0 first. Throws
/// SelfAdjacentEdge when e bounds one triangle on both sides.
IdealTriangulation2 whitehead(const IdealTriangulation2& tri, int e);

/// Triangle map and per-triangle rotation: vertex k of triangle s in `from`
/// is vertex k + rotation[s] of triangle map[s] in `to`.
struct TriangleMap {
  std::vector<int> map;
  std::vector<int> rotation;
};

/// All isomorphisms of oriented triangulations (at most 3T of them).
std::vector<TriangleMap> find_isomorphisms(const IdealTriangulation2& from, const IdealTriangulation2& to);
/// The first of them, if any.
std::optional<TriangleMap> find_isomorphism(const IdealTriangulation2& from, const IdealTriangulation2& to);
/// Edge map induced by a triangle map; throws ClosingMismatch if the
/// triangle map does not respect the gluings.
std::vector<int> induced_edge_map(const IdealTriangulation2& from, const IdealTriangulation2& to, const TriangleMap& m);

/// A tetrahedron face seen from a layer triangle: vertex[k] is the
/// tetrahedron vertex at triangle vertex k.
struct FaceRef {
  int tet = -1;
  int face = -1;
  std::array<int, 3> vertex{};
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

struct Attachment {
  int tet;
  int edge;
  moves::MoveKind parity;  // SplitLeft or SplitRight
  int lower[2];  // triangles below, at edge ends 0 and 1
};

/// Layers 0..m (layer m is layer 0 again, relabeled by `closing`), the
/// tetrahedra attached between consecutive layers, and for every layer
/// triangle the tetrahedron faces directly above and below it.
struct LayeredStructure {
  std::vector<IdealTriangulation2> layers;
  std::vector<std::vector<Attachment>> moves;
  TriangleMap closing;  // layer 0 -> layer m
  std::vector<std::vector<FaceRef>> up;
  std::vector<std::vector<FaceRef>> down;

  int period() const { return static_cast<int>(moves.size()); }
};

/// Stacks taut tetrahedra on a fully punctured track, one per split.
/// Tetrahedron vertices are W=0, E=1, N=2, S=3: the split edge is NS, the
/// new edge WE, faces 0 and 1 point inward and faces 2 and 3 outward.
class LayeredBuilder {
 public:
  explicit LayeredBuilder(const track::TrainTrack& start);

  /// Split the large branch e with the given parity, attaching a tetrahedron.
  void split(int e, moves::MoveKind parity);
  /// Flip edge e of the current layer: rotate its two triangles so e is in
  /// slot 0, then split left.
  void flip(int e);
  /// Close the current step; the current layer becomes the next layer.
  void end_step();

  const track::TrainTrack& current() const { return track_; }
  IdealTriangulation2 current_layer() const;

  /// Glue the top layer to the bottom one. Throws ClosingMismatch.
  std::pair<TautTriangulation3, LayeredStructure> close(const TriangleMap& closing);

 private:
  void rotate(int s, int r);

  track::TrainTrack track_;
  TautTriangulation3 tri_;
  LayeredStructure layered_;
  std::vector<FaceRef> pending_;  // tet face under each current triangle; tet < 0 if none yet
  std::vector<int> rot_;  // accumulated rotation per triangle
  std::vector<std::vector<int>> layer_rot_;
  std::vector<Attachment> step_;
};

/// One period of a certified splitting sequence as a layered triangulation.
/// Layer i is the dual of state n + i. Throws ClosingMismatch.
std::pair<TautTriangulation3, LayeredStructure> build_layered(const moves::SplittingSequence& seq,
                                                              const moves::PeriodicityCertificate& cert);

}  // namespace veer::taut
