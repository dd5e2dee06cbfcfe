#include "veer/track/ideal_triangulation.hpp"

#include "veer/error.hpp"

#include <numeric>
#include <stdexcept>

namespace veer::track {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<std::array<int, 3>> IdealTriangulation2::vertex_classes() const {
  const int n = 3 * num_triangles();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) { parent[find(parent, a)] = find(parent, b); };
  for (const auto& e : edges) {
    auto [t1, k1] = e[0];
    auto [t2, k2] = e[1];
    unite(3 * t1 + (k1 + 1) % 3, 3 * t2 + (k2 + 2) % 3);
    unite(3 * t1 + (k1 + 2) % 3, 3 * t2 + (k2 + 1) % 3);
  }
  std::vector<int> id(n, -1);
  int next = 0;
  std::vector<std::array<int, 3>> out(num_triangles());
  for (int c = 0; c < n; ++c) {
    int r = find(parent, c);
    if (id[r] < 0) id[r] = next++;
    out[c / 3][c % 3] = id[r];
  }
  return out;
}

int IdealTriangulation2::num_vertices() const {
  int v = 0;
  for (const auto& t : vertex_classes())
    for (int c : t) v = std::max(v, c + 1);
  return v;
}

int IdealTriangulation2::genus() const { return (2 - (num_vertices() - num_edges() + num_triangles())) / 2; }

void IdealTriangulation2::check_consistency() const {
  std::vector<int> uses(3 * triangles.size(), 0);
  for (int e = 0; e < num_edges(); ++e)
    for (const Side& s : edges[e]) {
      if (s.tri < 0 || s.tri >= num_triangles() || s.slot < 0 || s.slot > 2)
        throw std::logic_error("edge " + std::to_string(e) + " references a missing triangle slot");
      if (triangles[s.tri][s.slot] != e) throw std::logic_error("edge table disagrees with triangle " + std::to_string(s.tri));
      ++uses[3 * s.tri + s.slot];
    }
  for (int u : uses)
    if (u != 1) throw std::logic_error("triangle slot not matched exactly once");
}

IdealTriangulation2 dual_triangulation(const TrainTrack& t) {
  auto regions = t.regions();
  std::string bad;
  for (std::size_t i = 0; i < regions.size(); ++i)
    if (!regions[i].punctured) bad += (bad.empty() ? "" : ", ") + std::to_string(i);
  if (!bad.empty()) throw Error(ErrorCode::NotFullyPunctured, "unpunctured regions: " + bad);

  IdealTriangulation2 tri;
  tri.triangles.resize(t.num_switches());
  tri.edges.resize(t.num_branches());
  tri.labels.resize(t.num_branches());
  for (int s = 0; s < t.num_switches(); ++s)
    for (int k = 0; k < 3; ++k) tri.triangles[s][k] = TrainTrack::branch_of(t.dart_at(s, slot_from_index(k)));
  for (int b = 0; b < t.num_branches(); ++b) {
    for (int end = 0; end < 2; ++end) {
      Endpoint p = t.endpoint(b, end);
      tri.edges[b][end] = {p.sw, index(p.slot)};
    }
    tri.labels[b] = t.label(b);
  }
  return tri;
}

TrainTrack track_from_triangulation(const IdealTriangulation2& tri) {
  TrainTrack t(tri.num_triangles(), tri.num_edges());
  for (int e = 0; e < tri.num_edges(); ++e) {
    const auto& [a, c] = tri.edges[e];
    t.connect(e, {a.tri, slot_from_index(a.slot)}, {c.tri, slot_from_index(c.slot)});
    if (e < static_cast<int>(tri.labels.size())) t.set_label(e, tri.labels[e]);
  }
  t.puncture_all();
  return t;
}

}  // namespace veer::track
