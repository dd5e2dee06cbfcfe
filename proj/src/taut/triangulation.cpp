#include "veer/taut/triangulation.hpp"

#include "veer/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace veer::taut {

namespace {

std::vector<Perm4> all_perms() {
  std::vector<Perm4> out;
  Perm4 p{0, 1, 2, 3};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

const std::vector<Perm4>& perms() {
  static const std::vector<Perm4> table = all_perms();
  return table;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Perm4 compose(const Perm4& outer, const Perm4& inner) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[i] = outer[inner[i]];
  return r;
}

Perm4 inverse(const Perm4& p) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[p[i]] = i;
  return r;
}

bool is_odd(const Perm4& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
  return inversions % 2 == 1;
}

int perm_index(const Perm4& p) {
  const auto& t = perms();
  return static_cast<int>(std::lower_bound(t.begin(), t.end(), p) - t.begin());
}

const Perm4& perm_from_index(int i) { return perms().at(i); }

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  static const int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[a][b];
}

std::pair<int, int> edge_vertices(int i) {
  static const std::pair<int, int> table[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return table[i];
}

void TautTriangulation3::glue(int t, int f, int u, const Perm4& p) {
  tets[t].neighbor[f] = u;
  tets[t].gluing[f] = p;
  tets[u].neighbor[p[f]] = t;
  tets[u].gluing[p[f]] = inverse(p);
}

bool TautTriangulation3::is_closed() const {
  for (const auto& t : tets)
    for (int n : t.neighbor)
      if (n < 0) return false;
  return true;
}

namespace {

// Walk around every edge class: the corner at edge ab of t with the other
// two vertices c, d continues through the face opposite d.
template <typename Visit>
void walk_edges(const TautTriangulation3& tri, Visit visit) {
  std::vector<std::array<char, 6>> seen(tri.tets.size(), std::array<char, 6>{});
  int cls = 0;
  for (int t0 = 0; t0 < tri.size(); ++t0)
    for (int e0 = 0; e0 < 6; ++e0) {
      if (seen[t0][e0]) continue;
      auto [a, b] = edge_vertices(e0);
      auto [c, d] = edge_vertices(5 - e0);
      int t = t0;
      do {
        seen[t][edge_index(a, b)] = 1;
        visit(cls, Corner{t, edge_index(a, b)}, d);
        const Perm4& p = tri.tets[t].gluing[d];
        int u = tri.tets[t].neighbor[d];
        if (u < 0) break;
        int na = p[a], nb = p[b], nc = p[d], nd = p[c];
        t = u, a = na, b = nb, c = nc, d = nd;
      } while (!seen[t][edge_index(a, b)]);
      ++cls;
    }
}

}  // namespace

std::vector<std::vector<Corner>> TautTriangulation3::edge_classes() const {
  std::vector<std::vector<Corner>> out;
  walk_edges(*this, [&](int cls, Corner c, int) {
    if (cls == static_cast<int>(out.size())) out.emplace_back();
    out[cls].push_back(c);
  });
  return out;
}

std::vector<std::vector<std::pair<int, int>>> TautTriangulation3::edge_class_faces() const {
  std::vector<std::vector<std::pair<int, int>>> out;
  walk_edges(*this, [&](int cls, Corner c, int exit) {
    if (cls == static_cast<int>(out.size())) out.emplace_back();
    out[cls].emplace_back(c.tet, exit);
  });
  return out;
}

std::vector<std::array<int, 6>> TautTriangulation3::edge_class_ids() const {
  std::vector<std::array<int, 6>> ids(tets.size());
  auto classes = edge_classes();
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const Corner& c : classes[i]) ids[c.tet][c.edge] = static_cast<int>(i);
  return ids;
}

int TautTriangulation3::num_cusps() const {
  std::vector<int> parent(4 * tets.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (int t = 0; t < size(); ++t)
    for (int f = 0; f < 4; ++f) {
      int u = tets[t].neighbor[f];
      if (u < 0) continue;
      for (int v = 0; v < 4; ++v)
        if (v != f) parent[find(parent, 4 * t + v)] = find(parent, 4 * u + tets[t].gluing[f][v]);
    }
  int count = 0;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) count += find(parent, i) == i;
  return count;
}

std::vector<std::array<int, 4>> TautTriangulation3::face_ids() const {
  std::vector<std::array<int, 4>> ids(tets.size(), std::array<int, 4>{-1, -1, -1, -1});
  int next = 0;
  for (int t = 0; t < size(); ++t)
    for (int f = 0; f < 4; ++f) {
      if (ids[t][f] >= 0) continue;
      ids[t][f] = next;
      int u = tets[t].neighbor[f];
      if (u >= 0) ids[u][tets[t].gluing[f][f]] = next;
      ++next;
    }
  return ids;
}

std::vector<int> TautTriangulation3::orientation() const {
  std::vector<int> sign(tets.size(), 0);
  for (int root = 0; root < size(); ++root) {
    if (sign[root]) continue;
    sign[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int f = 0; f < 4; ++f) {
        int u = tets[t].neighbor[f];
        if (u < 0) continue;
        int want = is_odd(tets[t].gluing[f]) ? sign[t] : -sign[t];
        if (!sign[u]) {
          sign[u] = want;
          stack.push_back(u);
        } else if (sign[u] != want) {
          return {};
        }
      }
    }
  }
  return sign;
}

bool is_pi_corner(const Tetrahedron& t, int edge) { return edge == t.pi || edge == 5 - t.pi; }

namespace {

// Edge spanned by the two vertices other than faces f and g.
int edge_between_faces(int f, int g) {
  int v[2], k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != f && i != g) v[k++] = i;
  return edge_index(v[0], v[1]);
}

std::pair<int, int> faces_with(const Tetrahedron& t, bool outward) {
  int f[2] = {-1, -1}, k = 0;
  for (int i = 0; i < 4; ++i)
    if (t.outward[i] == outward && k < 2) f[k++] = i;
  return {f[0], f[1]};
}

}  // namespace

std::vector<TautViolation> check_taut(const TautTriangulation3& tri) {
  std::vector<TautViolation> out;
  for (int t = 0; t < tri.size(); ++t) {
    const Tetrahedron& tet = tri.tets[t];
    for (int f = 0; f < 4; ++f) {
      int u = tet.neighbor[f];
      if (u < 0) {
        out.push_back({TautViolation::Kind::Unglued, t, "face " + std::to_string(f) + " is not glued"});
        continue;
      }
      if (tet.outward[f] == tri.tets[u].outward[tet.gluing[f][f]])
        out.push_back({TautViolation::Kind::Coorientation, t,
                       "face " + std::to_string(f) + " has the same coorientation on both sides"});
    }
    int outs = static_cast<int>(std::count(tet.outward.begin(), tet.outward.end(), true));
    if (outs != 2) {
      out.push_back({TautViolation::Kind::FaceCount, t, std::to_string(outs) + " outward faces"});
      continue;
    }
    auto [i0, i1] = faces_with(tet, false);
    int bottom = edge_between_faces(i0, i1);
    if (!is_pi_corner(tet, bottom))
      out.push_back({TautViolation::Kind::PiPlacement, t, "pi edges are not where equal coorientations meet"});
  }
  if (!out.empty() || !tri.is_closed()) return out;
  auto classes = tri.edge_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    int pis = 0;
    for (const Corner& c : classes[i]) pis += is_pi_corner(tri.tets[c.tet], c.edge);
    if (pis != 2)
      out.push_back({TautViolation::Kind::AngleSum, static_cast<int>(i),
                     "angle sum " + std::to_string(pis) + " pi over " + std::to_string(classes[i].size()) + " corners"});
  }
  return out;
}

std::array<int, 6> local_colors(const Tetrahedron& t, int orientation_sign) {
  std::array<int, 6> col{-1, -1, -1, -1, -1, -1};
  auto [o0, o1] = faces_with(t, true);
  auto [i0, i1] = faces_with(t, false);
  auto [a, b] = edge_vertices(edge_between_faces(o0, o1));  // top diagonal
  auto [c, d] = edge_vertices(edge_between_faces(i0, i1));  // bottom diagonal
  Perm4 sigma{a, b, c, d};
  bool positive = (is_odd(sigma) ? -1 : 1) * orientation_sign == 1;
  int left = positive ? 0 : 1, right = 1 - left;
  col[edge_index(a, c)] = left;
  col[edge_index(b, d)] = left;
  col[edge_index(c, b)] = right;
  col[edge_index(d, a)] = right;
  return col;
}

VeeringResult check_veering(const TautTriangulation3& tri) {
  auto violations = check_taut(tri);
  if (!violations.empty())
    throw Error(ErrorCode::NotTaut, "tetrahedron " + std::to_string(violations[0].index) + ": " + violations[0].detail);
  auto sign = tri.orientation();
  if (sign.empty()) throw Error(ErrorCode::NotTaut, "triangulation is not orientable");

  std::vector<std::array<int, 6>> local(tri.tets.size());
  for (int t = 0; t < tri.size(); ++t) local[t] = local_colors(tri.tets[t], sign[t]);

  VeeringResult r;
  auto classes = tri.edge_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    std::vector<int> pi_pos;
    for (std::size_t k = 0; k < cls.size(); ++k)
      if (is_pi_corner(tri.tets[cls[k].tet], cls[k].edge)) pi_pos.push_back(static_cast<int>(k));
    const int n = static_cast<int>(cls.size());
    int side1 = pi_pos[1] - pi_pos[0] - 1, side2 = n - 2 - side1;
    auto fail = [&](const std::string& why) {
      r.veering = false;
      r.bad_edge = static_cast<int>(i);
      r.reason = "edge " + std::to_string(i) + ": " + why;
      r.colors.clear();
      return r;
    };
    if (side1 == 0 || side2 == 0) return fail("one side has no tetrahedra (degree " + std::to_string(n) + ")");
    int color = -1;
    for (const Corner& c : cls) {
      int lc = local[c.tet][c.edge];
      if (lc < 0) continue;
      if (color < 0) color = lc;
      else if (color != lc) return fail("turns both left and right");
    }
    r.colors.push_back(color == 0 ? Color::Left : Color::Right);
  }
  r.veering = true;
  return r;
}

TautTriangulation3 reverse(const TautTriangulation3& t) {
  TautTriangulation3 r = t;
  for (auto& tet : r.tets)
    for (auto& o : tet.outward) o = !o;
  return r;
}

}  // namespace veer::taut
