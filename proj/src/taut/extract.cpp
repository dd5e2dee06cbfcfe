#include "veer/taut/extract.hpp"

#include "veer/error.hpp"

#include <stdexcept>

namespace veer::taut {

using track::Slot;
using track::TrainTrack;

namespace {

// Layer triangulation with slot roles chosen by the tetrahedra above.
TrainTrack layer_track(const TautTriangulation3& t, const IdealTriangulation2& layer, const std::vector<FaceRef>& above,
                       bool reversed) {
  TrainTrack out(layer.num_triangles(), layer.num_edges());
  std::vector<std::array<Slot, 3>> role(layer.num_triangles());
  for (int s = 0; s < layer.num_triangles(); ++s) {
    const FaceRef& f = above[s];
    const Tetrahedron& tet = t.tets[f.tet];
    if (tet.outward[f.face]) throw std::logic_error("tetrahedron above a layer triangle points the wrong way");
    // The triangle corner opposite the bottom diagonal is the apex of the
    // tetrahedron's other inward face.
    int j = -1;
    for (int k = 0; k < 3; ++k)
      if (!tet.outward[f.vertex[k]]) j = k;
    if (j < 0) throw std::logic_error("layer triangle does not contain the bottom diagonal");
    role[s][j] = Slot::Large;
    role[s][(j + 1) % 3] = reversed ? Slot::SmallRight : Slot::SmallLeft;
    role[s][(j + 2) % 3] = reversed ? Slot::SmallLeft : Slot::SmallRight;
  }
  for (int e = 0; e < layer.num_edges(); ++e) {
    for (int end = 0; end < 2; ++end) {
      auto side = layer.edges[e][end];
      out.attach(2 * e + end, side.tri, role[side.tri][side.slot]);
    }
    if (e < static_cast<int>(layer.labels.size())) out.set_label(e, layer.labels[e]);
  }
  out.puncture_all();
  return out;
}

}  // namespace

ExtractedFolding extract_folding(const TautTriangulation3& t, const LayeredStructure& layers,
                                 const std::optional<algebra::AlgebraicNumber>& lambda) {
  try {
    auto v = check_veering(t);
    if (!v.veering) throw Error(ErrorCode::VeeringRequired, v.reason);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotTaut) throw Error(ErrorCode::VeeringRequired, err.what());
    throw;
  }
  const int m = layers.period();
  if (m == 0) throw std::invalid_argument("layering has no steps");

  ExtractedFolding out;
  const FaceRef& probe = layers.up[0][0];
  out.reversed = t.tets[probe.tet].outward[probe.face];

  auto flow_layer = [&](int k) { return out.reversed ? m - k : k; };
  auto& seq = out.sequence;
  for (int k = 0; k <= m; ++k) {
    int i = flow_layer(k);
    seq.tracks.push_back(layer_track(t, layers.layers[i], out.reversed ? layers.down[i] : layers.up[i], out.reversed));
    track::validate(seq.tracks.back());
  }

  // The tetrahedra of each step, folded back, must undo the step.
  for (int k = 0; k < m; ++k) {
    const auto& step = layers.moves[out.reversed ? m - 1 - k : k];
    TrainTrack cur = seq.tracks[k + 1];
    std::vector<moves::MoveRecord> batch;
    for (const Attachment& a : step) {
      auto folded = moves::fold(cur, a.edge);
      cur = std::move(folded.track);
      batch.push_back(std::move(folded.record));
    }
    if (!moves::canonical_form(cur).same_key(moves::canonical_form(seq.tracks[k])))
      throw std::logic_error("folding step " + std::to_string(k) + " does not recover the layer below");
    seq.batches.push_back(std::move(batch));
  }

  auto edges = induced_edge_map(layers.layers.front(), layers.layers.back(), layers.closing);
  out.closing.branch_map.assign(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (out.reversed) out.closing.branch_map[edges[e]] = static_cast<int>(e);
    else out.closing.branch_map[e] = edges[e];
  }

  out.transition = moves::transition_matrix(seq, 0, m, out.closing);
  out.pf = algebra::dominant_eigenpair(out.transition, lambda);

  // Measures: layer 0 carries the eigenvector; walk down from layer m.
  const int nb = seq.tracks[0].num_branches();
  std::vector<track::Measure> mus(m + 1);
  mus[m].weights.assign(nb, out.pf.vector[0]);
  for (int b = 0; b < nb; ++b) mus[m][out.closing.branch_map[b]] = out.pf.vector[b];
  for (int k = m - 1; k >= 0; --k) {
    std::vector<algebra::AlgebraicNumber> w = mus[k + 1].weights;
    auto factors = moves::fold_factors(seq, k, 1);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) w = algebra::multiply(*it, w);
    mus[k].weights = std::move(w);
  }
  for (int b = 0; b < nb; ++b)
    if (!(mus[0][b] == out.pf.lambda * out.pf.vector[b]))
      throw std::logic_error("recovered measures do not close up");
  seq.measures = std::move(mus);
  for (int k = 0; k <= m; ++k) track::validate_measure(seq.tracks[k], seq.measures[k]);
  for (int k = 0; k < m; ++k) out.forms.push_back(moves::canonical_form(seq.tracks[k], seq.measures[k]));
  return out;
}

}  // namespace veer::taut
