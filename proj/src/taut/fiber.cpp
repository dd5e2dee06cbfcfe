#include "veer/taut/fiber.hpp"

#include "veer/error.hpp"

#include <stdexcept>
#include <string>

namespace veer::taut {

namespace {

// Row reduction in place; returns the rank and leaves the pivot columns.
int reduce(std::vector<std::vector<mpq_class>>& a, std::vector<int>& pivots) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c + 1 < cols && r < rows; ++c) {  // last column is the right-hand side
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

FiberCycle fiber_cycle(const TautTriangulation3& t, const LayeredStructure& layers) {
  const int n = t.size();
  auto ids = t.face_ids();
  const int faces = t.num_faces();

  std::vector<mpq_class> base(faces, 0);
  for (const FaceRef& f : layers.up.at(0)) base[ids[f.tet][f.face]] += 1;

  // Face class -> tetrahedron below it (face outward) and above it (inward).
  std::vector<int> below(faces, -1), above(faces, -1);
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) (t.tets[i].outward[f] ? below : above)[ids[i][f]] = i;

  // w_f = base_f + c_below - c_above; per tetrahedron, inward sum = outward sum.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) {
      int id = ids[i][f];
      mpq_class sign = t.tets[i].outward[f] ? -1 : 1;
      a[i][below[id]] += sign;
      a[i][above[id]] -= sign;
      a[i][n] -= sign * base[id];
    }
  FiberCycle out;
  out.unknowns = n;
  std::vector<int> pivots;
  out.rank = reduce(a, pivots);
  for (int r = out.rank; r < n; ++r)
    if (a[r][n] != 0) throw std::logic_error("fiber system is inconsistent");
  if (out.rank != n - 1)
    throw Error(ErrorCode::DegenerateSystem, "rank " + std::to_string(out.rank) + " for " + std::to_string(n) +
                                                 " tetrahedra (expected " + std::to_string(n - 1) + ")");
  std::vector<mpq_class> c(n, 0);  // the free potential is set to 0
  for (int r = 0; r < out.rank; ++r) c[pivots[r]] = a[r][n];

  out.weights.resize(faces);
  for (int f = 0; f < faces; ++f) {
    out.weights[f] = base[f] + c[below[f]] - c[above[f]];
    out.weights[f].canonicalize();
  }
  auto bad = check_cycle(t, out);
  if (!bad.empty()) throw std::logic_error("fiber cycle check failed: " + bad.front());
  return out;
}

std::vector<std::string> check_cycle(const TautTriangulation3& t, const FiberCycle& c) {
  std::vector<std::string> out;
  auto ids = t.face_ids();
  if (static_cast<int>(c.weights.size()) != t.num_faces()) return {"wrong number of face weights"};
  for (int i = 0; i < t.size(); ++i) {
    mpq_class s = 0;
    for (int f = 0; f < 4; ++f) s += t.tets[i].outward[f] ? c.weights[ids[i][f]] : -c.weights[ids[i][f]];
    if (s != 0) out.push_back("tetrahedron " + std::to_string(i) + " has signed face sum " + s.get_str());
  }
  auto classes = t.edge_classes();
  auto fans = t.edge_class_faces();
  for (std::size_t e = 0; e < classes.size(); ++e) {
    std::vector<int> pis;
    for (std::size_t k = 0; k < classes[e].size(); ++k)
      if (is_pi_corner(t.tets[classes[e][k].tet], classes[e][k].edge)) pis.push_back(static_cast<int>(k));
    if (pis.size() != 2) {
      out.push_back("edge " + std::to_string(e) + " is not taut");
      continue;
    }
    mpq_class side[2] = {0, 0};
    for (int k = 0; k < static_cast<int>(fans[e].size()); ++k) {
      auto [tet, face] = fans[e][k];
      side[k >= pis[0] && k < pis[1] ? 0 : 1] += c.weights[ids[tet][face]];
    }
    if (side[0] != side[1])
      out.push_back("edge " + std::to_string(e) + " has side weights " + side[0].get_str() + " and " + side[1].get_str());
  }
  return out;
}

}  // namespace veer::taut
