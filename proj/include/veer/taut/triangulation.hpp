#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace veer::taut {

/// Vertex map of a face gluing: p[v] is the image of vertex v.
using Perm4 = std::array<int, 4>;

Perm4 compose(const Perm4& outer, const Perm4& inner);  // outer after inner
Perm4 inverse(const Perm4& p);
bool is_odd(const Perm4& p);
/// Index of p among the 24 permutations in lexicographic order.
int perm_index(const Perm4& p);
const Perm4& perm_from_index(int i);

/// Tetrahedron edges 01, 02, 03, 12, 13, 23 are numbered 0..5; edge i is
/// opposite edge 5 - i.
int edge_index(int a, int b);
std::pair<int, int> edge_vertices(int i);

/// Ideal tetrahedron with a taut structure. Face f is the face opposite
/// vertex f. `pi` is the smaller index of the opposite edge pair carrying
/// angle pi.
struct Tetrahedron {
  std::array<int, 4> neighbor{-1, -1, -1, -1};
  std::array<Perm4, 4> gluing{};
  std::array<bool, 4> outward{};
  int pi = 0;

  friend bool operator==(const Tetrahedron&, const Tetrahedron&) = default;
};

/// A corner of an edge class: tetrahedron and local edge index.
struct Corner {
  int tet;
  int edge;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct TautTriangulation3 {
  std::vector<Tetrahedron> tets;

  int size() const { return static_cast<int>(tets.size()); }
  /// Glue face f of t to face p[f] of u (and the reverse gluing).
  void glue(int t, int f, int u, const Perm4& p);
  bool is_closed() const;

  /// Edge classes with their corners in cyclic order around the edge.
  std::vector<std::vector<Corner>> edge_classes() const;
  /// For each edge class, the face crossed after each corner of
  /// edge_classes(), as (tet, face) pairs.
  std::vector<std::vector<std::pair<int, int>>> edge_class_faces() const;
  /// Class id per (tet, local edge).
  std::vector<std::array<int, 6>> edge_class_ids() const;
  /// Vertex-link classes (cusps).
  int num_cusps() const;
  /// Face class id per (tet, face); a class is one glued pair.
  std::vector<std::array<int, 4>> face_ids() const;
  int num_faces() const { return 2 * size(); }

  /// +1 / -1 per tetrahedron so that every gluing reverses orientation;
  /// empty if the complex is not orientable.
  std::vector<int> orientation() const;

  friend bool operator==(const TautTriangulation3&, const TautTriangulation3&) = default;
};

bool is_pi_corner(const Tetrahedron& t, int edge);

struct TautViolation {
  enum class Kind { FaceCount, PiPlacement, AngleSum, Coorientation, Unglued } kind;
  int index;  // tetrahedron, or edge class for AngleSum
  std::string detail;
};

/// Two inward and two outward faces per tetrahedron, pi on the edges where
/// faces of equal coorientation meet, exactly two pi corners per edge class,
/// and coorientations that agree across every gluing. Empty means taut.
std::vector<TautViolation> check_taut(const TautTriangulation3& t);

enum class Color { Left, Right };

struct VeeringResult {
  bool veering = false;
  std::vector<Color> colors;  // per edge class, valid when veering
  int bad_edge = -1;          // first edge class that fails
  std::string reason;
};

/// Left/right colour of each equatorial (angle 0) edge of one tetrahedron,
/// given its orientation sign. Pi edges get no colour.
std::array<int, 6> local_colors(const Tetrahedron& t, int orientation_sign);  // 0 left, 1 right, -1 none

/// Throws NotTaut unless check_taut passes.
VeeringResult check_veering(const TautTriangulation3& t);

/// Every coorientation flipped.
TautTriangulation3 reverse(const TautTriangulation3& t);

}  // namespace veer::taut
