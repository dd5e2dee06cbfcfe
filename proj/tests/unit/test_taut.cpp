#include "veer/cli/seed.hpp"
#include "veer/error.hpp"
#include "veer/moves/sequence.hpp"
#include "veer/taut/conjugacy.hpp"
#include "veer/taut/extract.hpp"
#include "veer/taut/fiber.hpp"
#include "veer/taut/layered.hpp"
#include "veer/taut/taut_io.hpp"
#include "veer/taut/triangulation.hpp"
#include "veer/track/generate.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace veer;
using namespace veer::taut;

namespace {

std::vector<std::string> torus_words(std::size_t min_len, std::size_t max_len) {
  std::vector<std::string> out;
  for (std::size_t len = min_len; len <= max_len; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i) w += (bits >> i) & 1 ? 'L' : 'R';
      if (w.find('R') != std::string::npos && w.find('L') != std::string::npos) out.push_back(w);
    }
  return out;
}

std::pair<TautTriangulation3, LayeredStructure> layered_for(const std::string& word) {
  auto seed = cli::seed_punctured_torus(word);
  auto run = moves::run_sequence(seed.track, seed.measure, 200, static_cast<int>(word.size()));
  REQUIRE(run.certificate);
  return build_layered(run.sequence, *run.certificate);
}

}  // namespace

TEST_CASE("RL gives the two-tetrahedron veering triangulation") {
  auto [t, layers] = layered_for("RL");
  CHECK(t.size() == 2);
  CHECK(t.is_closed());
  CHECK(check_taut(t).empty());
  CHECK(t.edge_classes().size() == 2);
  CHECK(t.num_cusps() == 1);
  CHECK_FALSE(t.orientation().empty());
  auto v = check_veering(t);
  CHECK_MESSAGE(v.veering, v.reason);
  CHECK(layers.period() == 2);
  CHECK(layers.layers.size() == 3);
}

TEST_CASE("torus words up to length 6 give veering triangulations") {
  for (const auto& w : torus_words(2, 6)) {
    CAPTURE(w);
    auto [t, layers] = layered_for(w);
    CHECK(t.size() == static_cast<int>(w.size()));
    auto bad = check_taut(t);
    CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad[0].detail));
    CHECK(static_cast<int>(t.edge_classes().size()) == t.size());
    CHECK(t.num_cusps() == 1);
    auto v = check_veering(t);
    CHECK_MESSAGE(v.veering, v.reason);
    auto r = check_veering(reverse(t));
    CHECK_MESSAGE(r.veering, r.reason);
  }
}

TEST_CASE("whitehead on the punctured torus") {
  auto torus = track::dual_triangulation(track::punctured_torus_track());
  for (int e = 0; e < torus.num_edges(); ++e) {
    auto once = whitehead(torus, e);
    once.check_consistency();
    CHECK(once.genus() == 1);
    CHECK(once.num_vertices() == 1);
    CHECK_FALSE(once == torus);
    auto twice = whitehead(once, e);
    bool identity = false;
    for (const auto& iso : find_isomorphisms(twice, torus))
      identity = identity || induced_edge_map(twice, torus, iso) == std::vector<int>{0, 1, 2};
    CHECK(identity);
  }
}

TEST_CASE("whitehead rejects an edge bounding one triangle twice") {
  bool found = false;
  for (const auto& t : testing::random_valid_tracks(4, 40, 17)) {
    auto tri = track::dual_triangulation(t);
    for (int e = 0; e < tri.num_edges(); ++e) {
      if (tri.edges[e][0].tri != tri.edges[e][1].tri) continue;
      found = true;
      try {
        whitehead(tri, e);
        FAIL("expected SelfAdjacentEdge");
      } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::SelfAdjacentEdge);
      }
    }
  }
  CHECK(found);
}

TEST_CASE("a back-tracking flip gives a taut triangulation that is not veering") {
  auto seed = cli::seed_punctured_torus("RL");
  auto run = moves::run_sequence(seed.track, seed.measure);
  REQUIRE(run.certificate);
  const auto& cert = *run.certificate;
  LayeredBuilder b(run.sequence.tracks[cert.n]);
  b.flip(1);
  b.end_step();
  b.flip(1);
  b.end_step();
  for (int i = cert.n; i < cert.n + cert.m; ++i) {
    for (const auto& rec : run.sequence.batches[i]) b.flip(rec.branch);
    b.end_step();
  }
  // any closing that makes every edge flip somewhere gives a taut complex
  std::optional<TautTriangulation3> closed;
  for (const auto& closing : find_isomorphisms(track::dual_triangulation(run.sequence.tracks[cert.n]), b.current_layer())) {
    auto attempt = b;
    auto built = attempt.close(closing).first;
    if (check_taut(built).empty()) {
      closed = built;
      break;
    }
  }
  REQUIRE(closed);
  const auto& t = *closed;
  CHECK(t.size() == 4);
  CHECK(check_taut(t).empty());
  auto v = check_veering(t);
  CHECK_FALSE(v.veering);
  CHECK(v.bad_edge >= 0);
  CHECK(t.edge_classes()[v.bad_edge].size() == 2);
}

TEST_CASE("check_taut reports violations") {
  auto [t, layers] = layered_for("RL");
  auto bad = t;
  bad.tets[0].pi = 1;
  auto v = check_taut(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].kind == TautViolation::Kind::PiPlacement);

  auto flipped = t;
  flipped.tets[1].outward = {true, true, false, false};
  CHECK_FALSE(check_taut(flipped).empty());
  CHECK_THROWS_AS(check_veering(flipped), Error);

  // one tetrahedron, inward faces glued to outward ones: some edge class
  // always ends up with the wrong number of pi corners
  int angle_sum_cases = 0;
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      Perm4 p = perm_from_index(i), q = perm_from_index(j);
      if (p[0] != 2 || q[1] != 3) continue;
      TautTriangulation3 one;
      one.tets.resize(1);
      one.tets[0].outward = {false, false, true, true};
      one.tets[0].pi = 0;
      one.glue(0, 0, 0, p);
      one.glue(0, 1, 0, q);
      if (!one.is_closed()) continue;
      for (const auto& x : check_taut(one)) angle_sum_cases += x.kind == TautViolation::Kind::AngleSum;
    }
  CHECK(angle_sum_cases > 0);
}

TEST_CASE("reverse is an involution") {
  auto [t, layers] = layered_for("RRL");
  CHECK(reverse(reverse(t)) == t);
  CHECK(check_taut(reverse(t)).empty());
}

TEST_CASE("extract_folding recovers the splitting sequence") {
  for (const auto& w : torus_words(2, 5)) {
    CAPTURE(w);
    auto seed = cli::seed_punctured_torus(w);
    auto run = moves::run_sequence(seed.track, seed.measure, 200, static_cast<int>(w.size()));
    REQUIRE(run.certificate);
    const auto& cert = *run.certificate;
    auto [t, layers] = build_layered(run.sequence, cert);
    auto ex = extract_folding(t, layers, cert.pf.lambda);
    CHECK_FALSE(ex.reversed);
    REQUIRE(static_cast<int>(ex.forms.size()) == cert.m);
    for (int k = 0; k < cert.m; ++k) {
      auto state = run.sequence.tracks[cert.n + k];
      state.puncture_all();
      CHECK(ex.forms[k].same_key(moves::canonical_form(state, run.sequence.measures[cert.n + k])));
    }
    CHECK(ex.pf.minpoly == cert.pf.minpoly);

    auto back = extract_folding(reverse(t), layers);
    CHECK(back.reversed);
    CHECK(back.pf.minpoly == cert.pf.minpoly);
  }
}

TEST_CASE("extract_folding needs a veering triangulation") {
  auto [t, layers] = layered_for("RL");
  auto bad = t;
  bad.tets[0].pi = 1;
  CHECK_THROWS_AS(extract_folding(bad, layers), Error);
}

TEST_CASE("fiber cycle of RL is uniform") {
  auto [t, layers] = layered_for("RL");
  auto c = fiber_cycle(t, layers);
  CHECK(c.rank == 1);
  REQUIRE(c.weights.size() == 4);
  for (const auto& w : c.weights) CHECK(w == c.weights[0]);
  CHECK(c.weights[0] > 0);
  CHECK(check_cycle(t, c).empty());
}

TEST_CASE("fiber cycles are positive cycles") {
  for (const auto& w : torus_words(2, 6)) {
    CAPTURE(w);
    auto [t, layers] = layered_for(w);
    auto c = fiber_cycle(t, layers);
    CHECK(check_cycle(t, c).empty());
    for (const auto& x : c.weights) CHECK(x > 0);
    // homogeneous: doubling stays a cycle, perturbing one face does not
    auto twice = c;
    for (auto& x : twice.weights) x *= 2;
    CHECK(check_cycle(t, twice).empty());
    auto off = c;
    off.weights[0] += 1;
    CHECK_FALSE(check_cycle(t, off).empty());
  }
}

namespace {

// Random tetrahedron renumbering and vertex relabelling, carrying the cycle.
std::pair<TautTriangulation3, FiberCycle> relabel(const TautTriangulation3& t, const FiberCycle& c, std::mt19937& rng) {
  const int n = t.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Perm4> tau(n);
  for (auto& p : tau) p = perm_from_index(static_cast<int>(rng() % 24));
  TautTriangulation3 r;
  r.tets.resize(n);
  for (int i = 0; i < n; ++i) {
    const Tetrahedron& old = t.tets[i];
    Tetrahedron& nt = r.tets[order[i]];
    Perm4 inv = inverse(tau[i]);
    for (int f = 0; f < 4; ++f) {
      int u = old.neighbor[f];
      nt.neighbor[tau[i][f]] = order[u];
      nt.gluing[tau[i][f]] = compose(tau[u], compose(old.gluing[f], inv));
      nt.outward[tau[i][f]] = old.outward[f];
    }
    auto [a, b] = edge_vertices(old.pi);
    int e = edge_index(tau[i][a], tau[i][b]);
    nt.pi = std::min(e, 5 - e);
  }
  auto old_ids = t.face_ids(), new_ids = r.face_ids();
  FiberCycle rc = c;
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f) rc.weights[new_ids[order[i]][tau[i][f]]] = c.weights[old_ids[i][f]];
  return {r, rc};
}

ConjugacyKey key_for(const std::string& w) {
  auto [t, layers] = layered_for(w);
  return conjugacy_key(t, fiber_cycle(t, layers));
}

}  // namespace

TEST_CASE("conjugacy key is a relabelling invariant") {
  std::mt19937 rng(23);
  for (const std::string w : {"RL", "RRL", "RRLL", "RLRRL"}) {
    CAPTURE(w);
    auto [t, layers] = layered_for(w);
    auto c = fiber_cycle(t, layers);
    auto key = conjugacy_key(t, c);
    for (int trial = 0; trial < 5; ++trial) {
      auto [r, rc] = relabel(t, c, rng);
      CHECK(check_taut(r).empty());
      CHECK(check_cycle(r, rc).empty());
      CHECK(compare_conjugacy(conjugacy_key(r, rc), key));
    }
    auto scaled = c;
    for (auto& x : scaled.weights) x *= mpq_class(3, 7);
    CHECK(conjugacy_key(t, scaled) == key);
  }
}

TEST_CASE("conjugacy keys of torus words") {
  CHECK(compare_conjugacy(key_for("RL"), key_for("LR")));
  CHECK(compare_conjugacy(key_for("RRL"), key_for("RLR")));
  CHECK(compare_conjugacy(key_for("RRL"), key_for("LRR")));
  CHECK(compare_conjugacy(key_for("RRLRL"), key_for("LRLRR")));
  CHECK_FALSE(compare_conjugacy(key_for("RL"), key_for("RRL")));
  CHECK_FALSE(compare_conjugacy(key_for("RRRL"), key_for("RRLL")));
  CHECK_FALSE(compare_conjugacy(key_for("RL"), key_for("RLRL")));
  CHECK(key_for("RL").digest().size() == 16);
}

TEST_CASE("triangulation files round trip") {
  auto [t, layers] = layered_for("RRL");
  TriangulationFile f{t, check_veering(t).colors, fiber_cycle(t, layers)};
  std::string text = write_triangulation(f);
  CHECK(text.rfind("tet 0 nbr ", 0) == 0);
  auto back = parse_triangulation_string(text);
  CHECK(back.tri == t);
  REQUIRE(back.colors);
  CHECK(*back.colors == *f.colors);
  REQUIRE(back.fiber);
  CHECK(back.fiber->weights == f.fiber->weights);
  CHECK(write_triangulation(back) == text);

  auto j = triangulation_to_json(f);
  CHECK(j["tetrahedra"].size() == 3);
  auto from_json = triangulation_from_json(nlohmann::json::parse(j.dump()));
  CHECK(write_triangulation(from_json) == text);
}

TEST_CASE("triangulation parse errors carry line numbers") {
  auto [t, layers] = layered_for("RL");
  std::string text = write_triangulation({t, std::nullopt, std::nullopt});
  auto line_of = [](const std::string& s) -> std::size_t {
    try {
      parse_triangulation_string(s);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("tet 0 nbr 0 0 0 0 perm 0123 0123 0123 0124 coor IIOO pi 01/23\n") == 1);
  CHECK(line_of("# comment\ntet 1 nbr 0 0 0 0 perm 0123 0123 0123 0123 coor IIOO pi 01/23\n") == 2);
  CHECK(line_of("\nbogus 1\n") == 2);
  std::string broken = text;
  broken.replace(broken.find("pi 01/23"), 8, "pi 01/32");
  CHECK(line_of(broken) == 1);
  std::string wrong_degree = text + "edge 0 degree 5\n";
  CHECK(line_of(wrong_degree) == 5);
  CHECK_THROWS_AS(triangulation_from_json(nlohmann::json::parse("{\"tetrahedra\": 3}")), ParseError);
}
