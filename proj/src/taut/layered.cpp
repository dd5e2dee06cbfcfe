#include "veer/taut/layered.hpp"

#include "veer/error.hpp"

#include <stdexcept>

namespace veer::taut {

using moves::MoveKind;
using track::Slot;
using track::TrainTrack;

namespace {

constexpr int W = 0, E = 1, N = 2, S = 3;

int mod3(int x) { return ((x % 3) + 3) % 3; }

// New slot k holds old slot k + r.
void rotate_triangle(IdealTriangulation2& tri, int s, int r) {
  r = mod3(r);
  if (r == 0) return;
  auto old = tri.triangles[s];
  for (int k = 0; k < 3; ++k) tri.triangles[s][k] = old[(k + r) % 3];
  for (auto& e : tri.edges)
    for (auto& side : e)
      if (side.tri == s) side.slot = mod3(side.slot - r);
}

FaceRef partner(const TautTriangulation3& t, const FaceRef& f) {
  const Tetrahedron& tet = t.tets[f.tet];
  const Perm4& p = tet.gluing[f.face];
  FaceRef out{tet.neighbor[f.face], p[f.face], {}};
  for (int k = 0; k < 3; ++k) out.vertex[k] = p[f.vertex[k]];
  return out;
}

}  // namespace

IdealTriangulation2 whitehead(const IdealTriangulation2& tri, int e) {
  if (e < 0 || e >= tri.num_edges()) throw std::out_of_range("no edge " + std::to_string(e));
  auto [a, b] = tri.edges[e];
  if (a.tri == b.tri) throw Error(ErrorCode::SelfAdjacentEdge, "edge " + std::to_string(e));
  IdealTriangulation2 r = tri;
  rotate_triangle(r, a.tri, a.slot);
  rotate_triangle(r, b.tri, b.slot);
  return track::dual_triangulation(moves::split(track::track_from_triangulation(r), e, MoveKind::SplitLeft).track);
}

std::vector<int> induced_edge_map(const IdealTriangulation2& from, const IdealTriangulation2& to, const TriangleMap& m) {
  auto fail = [](const std::string& why) { return Error(ErrorCode::ClosingMismatch, why); };
  if (from.num_triangles() != to.num_triangles() || from.num_edges() != to.num_edges())
    throw fail("triangulations have different sizes");
  if (static_cast<int>(m.map.size()) != from.num_triangles() || m.rotation.size() != m.map.size())
    throw fail("triangle map has the wrong size");
  std::vector<int> edge(from.num_edges(), -1), used(to.num_edges(), 0), hit(to.num_triangles(), 0);
  for (int s = 0; s < from.num_triangles(); ++s) {
    int x = m.map[s];
    if (x < 0 || x >= to.num_triangles() || hit[x]++) throw fail("triangle map is not a bijection");
    for (int k = 0; k < 3; ++k) {
      int e = from.triangles[s][k], f = to.triangles[x][mod3(k + m.rotation[s])];
      if (edge[e] < 0) {
        if (used[f]++) throw fail("two edges map to edge " + std::to_string(f));
        edge[e] = f;
      } else if (edge[e] != f) {
        throw fail("edge " + std::to_string(e) + " maps to both " + std::to_string(edge[e]) + " and " + std::to_string(f));
      }
    }
  }
  return edge;
}

std::vector<TriangleMap> find_isomorphisms(const IdealTriangulation2& from, const IdealTriangulation2& to) {
  std::vector<TriangleMap> out;
  const int n = from.num_triangles();
  if (n == 0 || n != to.num_triangles() || from.num_edges() != to.num_edges()) return out;
  for (int x0 = 0; x0 < n; ++x0)
    for (int r0 = 0; r0 < 3; ++r0) {
      TriangleMap m{std::vector<int>(n, -1), std::vector<int>(n, 0)};
      m.map[0] = x0;
      m.rotation[0] = r0;
      std::vector<int> queue{0};
      bool ok = true;
      for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
        int s = queue[qi];
        for (int k = 0; k < 3 && ok; ++k) {
          int e = from.triangles[s][k];
          auto far = from.edges[e][0] == IdealTriangulation2::Side{s, k} ? from.edges[e][1] : from.edges[e][0];
          IdealTriangulation2::Side img{m.map[s], mod3(k + m.rotation[s])};
          int f = to.triangles[img.tri][img.slot];
          auto far_img = to.edges[f][0] == img ? to.edges[f][1] : to.edges[f][0];
          int rot = mod3(far_img.slot - far.slot);
          if (m.map[far.tri] < 0) {
            m.map[far.tri] = far_img.tri;
            m.rotation[far.tri] = rot;
            queue.push_back(far.tri);
          } else if (m.map[far.tri] != far_img.tri || m.rotation[far.tri] != rot) {
            ok = false;
          }
        }
      }
      if (!ok || static_cast<int>(queue.size()) != n) continue;
      try {
        induced_edge_map(from, to, m);
        out.push_back(std::move(m));
      } catch (const Error&) {
      }
    }
  return out;
}

std::optional<TriangleMap> find_isomorphism(const IdealTriangulation2& from, const IdealTriangulation2& to) {
  auto all = find_isomorphisms(from, to);
  if (all.empty()) return std::nullopt;
  return all.front();
}

LayeredBuilder::LayeredBuilder(const TrainTrack& start) : track_(start) {
  track_.puncture_all();
  const int n = track_.num_switches();
  pending_.assign(n, FaceRef{});
  rot_.assign(n, 0);
  layered_.layers.push_back(current_layer());
  layered_.up.emplace_back(n);
  layer_rot_.push_back(rot_);
}

IdealTriangulation2 LayeredBuilder::current_layer() const { return track::dual_triangulation(track_); }

void LayeredBuilder::rotate(int s, int r) {
  r = mod3(r);
  if (r == 0) return;
  std::array<int, 3> old{};
  for (int k = 0; k < 3; ++k) old[k] = track_.dart_at(s, track::slot_from_index(k));
  for (int k = 0; k < 3; ++k) track_.attach(old[(k + r) % 3], s, track::slot_from_index(k));
  if (pending_[s].tet >= 0) {
    auto v = pending_[s].vertex;
    for (int k = 0; k < 3; ++k) pending_[s].vertex[k] = v[(k + r) % 3];
  }
  rot_[s] = mod3(rot_[s] + r);
}

void LayeredBuilder::split(int e, MoveKind parity) {
  if (e < 0 || e >= track_.num_branches()) throw std::out_of_range("no branch " + std::to_string(e));
  if (track::classify_branch(track_, e) != track::BranchType::Large)
    throw Error(ErrorCode::NotLarge, "branch " + std::to_string(e));
  const int s1 = track_.endpoint(e, 0).sw, s2 = track_.endpoint(e, 1).sw;
  if (s1 == s2) throw Error(ErrorCode::SelfAdjacentEdge, "edge " + std::to_string(e));

  const int t = tri_.size();
  Tetrahedron tet;
  tet.outward = {false, false, true, true};
  tet.pi = 0;  // edges WE and NS
  tri_.tets.push_back(tet);

  // Glue a bottom face onto whatever lies under the triangle and record it
  // as the face above every earlier layer that still sees this triangle.
  auto attach_bottom = [&](int s, int face, std::array<int, 3> vm) {
    const FaceRef& below = pending_[s];
    if (below.tet >= 0) {
      Perm4 p{};
      p[below.face] = face;
      for (int k = 0; k < 3; ++k) p[below.vertex[k]] = vm[k];
      tri_.glue(below.tet, below.face, t, p);
    }
    for (std::size_t i = 0; i < layered_.up.size(); ++i) {
      FaceRef& up = layered_.up[i][s];
      if (up.tet >= 0) continue;
      up = {t, face, {}};
      for (int k = 0; k < 3; ++k) up.vertex[k] = vm[mod3(k + layer_rot_[i][s] - rot_[s])];
    }
  };
  attach_bottom(s1, 1, {W, N, S});
  attach_bottom(s2, 0, {E, S, N});

  track_ = moves::split(track_, e, parity).track;
  if (parity == MoveKind::SplitLeft) {
    pending_[s2] = {t, 3, {W, N, E}};
    pending_[s1] = {t, 2, {E, S, W}};
  } else {
    pending_[s2] = {t, 2, {W, E, S}};
    pending_[s1] = {t, 3, {E, W, N}};
  }
  step_.push_back({t, e, parity, {s1, s2}});
}

void LayeredBuilder::flip(int e) {
  if (e < 0 || e >= track_.num_branches()) throw std::out_of_range("no edge " + std::to_string(e));
  auto a = track_.endpoint(e, 0), b = track_.endpoint(e, 1);
  if (a.sw == b.sw) throw Error(ErrorCode::SelfAdjacentEdge, "edge " + std::to_string(e));
  rotate(a.sw, track::index(a.slot));
  rotate(b.sw, track::index(b.slot));
  split(e, MoveKind::SplitLeft);
}

void LayeredBuilder::end_step() {
  layered_.moves.push_back(std::move(step_));
  step_.clear();
  layered_.layers.push_back(current_layer());
  layered_.up.emplace_back(track_.num_switches());
  layer_rot_.push_back(rot_);
}

std::pair<TautTriangulation3, LayeredStructure> LayeredBuilder::close(const TriangleMap& closing) {
  if (!step_.empty()) end_step();
  const int n = track_.num_switches();
  const int m = layered_.period();
  if (m == 0 || tri_.size() == 0) throw Error(ErrorCode::ClosingMismatch, "no tetrahedra to close up");
  induced_edge_map(layered_.layers.front(), layered_.layers.back(), closing);
  layered_.closing = closing;

  // Glue the top of the stack to the bottom: layer-0 triangle s is layer-m
  // triangle map(s); if that one was never covered, it is itself a layer-0
  // triangle, so keep following the map down.
  for (int s = 0; s < n; ++s) {
    const FaceRef& above = layered_.up[0][s];
    if (above.tet < 0) continue;
    std::array<int, 3> at{};  // layer-0 vertex k of s as a vertex of triangle x
    for (int k = 0; k < 3; ++k) at[k] = mod3(k + closing.rotation[s]);
    int x = closing.map[s];
    bool glued = false;
    for (int guard = 0; guard <= n && !glued; ++guard) {
      const FaceRef& below = pending_[x];
      if (below.tet >= 0) {
        Perm4 p{};
        p[below.face] = above.face;
        for (int k = 0; k < 3; ++k) p[below.vertex[at[k]]] = above.vertex[k];
        tri_.glue(below.tet, below.face, above.tet, p);
        glued = true;
      } else {
        for (int k = 0; k < 3; ++k) at[k] = mod3(at[k] + rot_[x] + closing.rotation[x]);
        x = closing.map[x];
      }
    }
    if (!glued) throw Error(ErrorCode::ClosingMismatch, "triangle " + std::to_string(s) + " never meets a tetrahedron");
  }
  if (!tri_.is_closed()) throw Error(ErrorCode::ClosingMismatch, "some tetrahedron face is left unglued");

  // Faces above triangles that stay uncovered to the top of the period come
  // from the next period.
  std::vector<int> inv(n);
  for (int s = 0; s < n; ++s) inv[closing.map[s]] = s;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i <= m; ++i)
      for (int t = 0; t < n; ++t) {
        FaceRef& up = layered_.up[i][t];
        if (up.tet >= 0) continue;
        int s = inv[t];
        const FaceRef& next = layered_.up[0][s];
        if (next.tet < 0) continue;
        up = {next.tet, next.face, {}};
        for (int k = 0; k < 3; ++k)
          up.vertex[k] = next.vertex[mod3(k + layer_rot_[i][t] - rot_[t] - closing.rotation[s])];
        changed = true;
      }
  }
  layered_.down.assign(m + 1, std::vector<FaceRef>(n));
  for (int i = 0; i <= m; ++i)
    for (int t = 0; t < n; ++t) {
      if (layered_.up[i][t].tet < 0) throw std::logic_error("layer triangle with nothing above it");
      layered_.down[i][t] = partner(tri_, layered_.up[i][t]);
    }
  return {tri_, layered_};
}

std::pair<TautTriangulation3, LayeredStructure> build_layered(const moves::SplittingSequence& seq,
                                                              const moves::PeriodicityCertificate& cert) {
  LayeredBuilder b(seq.tracks.at(cert.n));
  for (int i = cert.n; i < cert.n + cert.m; ++i) {
    for (const auto& rec : seq.batches.at(i)) b.split(rec.branch, rec.kind);
    b.end_step();
    TrainTrack expect = seq.tracks.at(i + 1);
    expect.puncture_all();
    if (!(b.current_layer() == track::dual_triangulation(expect)))
      throw std::logic_error("layer " + std::to_string(i + 1 - cert.n) + " is not dual to the splitting sequence");
  }
  TriangleMap closing{cert.iso.switch_map, std::vector<int>(cert.iso.switch_map.size(), 0)};
  auto out = b.close(closing);
  if (out.first.size() != cert.splits)
    throw std::logic_error("tetrahedron count differs from the split count of the period");
  return out;
}

}  // namespace veer::taut
