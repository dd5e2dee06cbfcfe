#include "veer/cli/pipeline.hpp"

#include "veer/cli/seed.hpp"
#include "veer/error.hpp"

#include <chrono>
#include <set>

namespace veer::cli {

namespace {

using nlohmann::json;

moves::TrackIsomorphism compose(const moves::TrackIsomorphism& outer, const moves::TrackIsomorphism& inner) {
  moves::TrackIsomorphism r;
  for (int s : inner.switch_map) r.switch_map.push_back(outer.switch_map[s]);
  for (std::size_t b = 0; b < inner.branch_map.size(); ++b) {
    int mid = inner.branch_map[b];
    r.branch_map.push_back(outer.branch_map[mid]);
    r.flip.push_back(inner.flip[b] ^ outer.flip[mid]);
  }
  return r;
}

std::string key_digest(const moves::RunResult& run, const moves::PeriodicityCertificate& cert) {
  auto [tri, layers] = taut::build_layered(run.sequence, cert);
  if (!taut::check_taut(tri).empty()) return "";
  return taut::conjugacy_key(tri, taut::fiber_cycle(tri, layers)).digest();
}

}  // namespace

PipelineResult run_pipeline(const track::TrainTrack& t, const track::Measure& mu, const std::string& input,
                            const PipelineOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  PipelineResult r;
  r.input = input;
  r.run = moves::run_sequence(t, mu, opts.max_steps, opts.period_multiple);
  if (!r.run.certificate)
    throw Error(ErrorCode::NoPeriod, "no period within " + std::to_string(opts.max_steps) + " maximal splits");
  const auto& cert = *r.run.certificate;

  auto built = taut::build_layered(r.run.sequence, cert);
  r.tri = std::move(built.first);
  r.layers = std::move(built.second);
  auto violations = taut::check_taut(r.tri);
  if (!violations.empty()) throw Error(ErrorCode::NotTaut, violations.front().detail);
  r.veering = taut::check_veering(r.tri);
  r.reverse_veering = taut::check_veering(taut::reverse(r.tri)).veering;
  r.edges = static_cast<int>(r.tri.edge_classes().size());
  r.cusps = r.tri.num_cusps();
  r.fiber = taut::fiber_cycle(r.tri, r.layers);
  r.key = taut::conjugacy_key(r.tri, r.fiber);
  r.bounds = bounds::verify_inequality(r.run);

  if (opts.check_alternatives) {
    const auto& start_track = r.run.sequence.tracks[cert.n];
    const auto& start_measure = r.run.sequence.measures[cert.n];
    auto form = moves::canonical_form(start_track, start_measure);
    auto base = moves::serialize_from(start_track, start_measure, form.roots.front());
    for (int root : form.roots) {
      auto other = moves::serialize_from(start_track, start_measure, root);
      auto automorphism = moves::isomorphism_between(start_track, base, start_track, other);
      moves::PeriodicityCertificate alt = cert;
      alt.iso = compose(cert.iso, automorphism);
      AlternativeClosing a;
      a.switch_map = alt.iso.switch_map;
      try {
        a.digest = key_digest(r.run, alt);
      } catch (const Error& e) {
        a.error = e.what();
      }
      if (!a.digest.empty() && a.digest != r.key.digest()) r.alternatives_agree = false;
      r.alternatives.push_back(std::move(a));
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

PipelineResult run_word(const std::string& word, PipelineOptions opts) {
  auto seed = seed_punctured_torus(word);
  opts.period_multiple = static_cast<int>(word.size());
  return run_pipeline(seed.track, seed.measure, "word " + word, opts);
}

int distinct_keys(const PipelineResult& r) {
  std::set<std::string> keys;
  for (const auto& a : r.alternatives)
    if (!a.digest.empty()) keys.insert(a.digest);
  return static_cast<int>(keys.size());
}

json interval_json(const algebra::RatInterval& iv, int digits) {
  return {{"lo", iv.lo.get_str()},
          {"hi", iv.hi.get_str()},
          {"lo_decimal", algebra::decimal_string(iv.lo, digits)},
          {"hi_decimal", algebra::decimal_string(iv.hi, digits)}};
}

json exact_json(const algebra::AlgebraicNumber& x, unsigned bits) {
  int digits = static_cast<int>(bits * 30103 / 100000);
  return {{"field", x.field()->descriptor_string()},
          {"exact", x.to_string()},
          {"decimal", x.to_decimal(digits)},
          {"interval", interval_json(algebra::approx(x, bits), digits + 1)}};
}

json bounds_json(const bounds::BoundReport& b, unsigned bits) {
  return {{"genus", b.genus},
          {"punctures", b.punctures},
          {"branches", b.e},
          {"branch_bound", b.branch_bound},
          {"maximal", b.maximal},
          {"steps", b.steps},
          {"splits", b.m},
          {"lambda", exact_json(b.lambda, bits)},
          {"margin", interval_json(b.margin, 6)},
          {"psi_exponent", {{"exact", b.psi_exponent.get_str()}, {"decimal", algebra::decimal_string(b.psi_exponent, 6)}}},
          {"inequality_holds", b.margin.lo >= 0}};
}

json report_json(const PipelineResult& r, const PipelineOptions& opts) {
  const auto& cert = *r.run.certificate;
  const auto& lambda = cert.pf.lambda;
  int digits = static_cast<int>(opts.precision_bits * 30103 / 100000);
  json colors = json::array();
  for (auto c : r.veering.colors) colors.push_back(c == taut::Color::Left ? "L" : "R");
  json weights = json::array();
  for (const auto& w : r.fiber.weights) weights.push_back(w.get_str());
  json alternatives = json::array();
  for (const auto& a : r.alternatives) {
    json entry = {{"switch_map", a.switch_map}, {"digest", a.digest}};
    if (!a.error.empty()) entry["error"] = a.error;
    alternatives.push_back(entry);
  }
  json j = {
      {"schema", kRunReportSchema},
      {"input", r.input},
      {"field",
       {{"minpoly", algebra::to_coeff_string(cert.pf.minpoly)},
        {"minpoly_pretty", algebra::to_pretty_string(cert.pf.minpoly)},
        {"root_interval", interval_json(algebra::approx(lambda, opts.precision_bits), digits + 1)},
        {"lambda", exact_json(lambda, opts.precision_bits)}}},
      {"period", {{"n", cert.n}, {"m", cert.m}, {"splits", cert.splits}}},
      {"tetrahedra", r.tri.size()},
      {"edges", r.edges},
      {"cusps", r.cusps},
      {"veering", {{"veering", r.veering.veering}, {"colors", colors}, {"reverse_veering", r.reverse_veering}}},
      {"fiber", {{"weights", weights}, {"rank", r.fiber.rank}, {"unknowns", r.fiber.unknowns}}},
      {"conjugacy", {{"digest", r.key.digest()}, {"key", r.key.text}}},
      {"alternative_closings",
       {{"agree", r.alternatives_agree}, {"distinct_keys", distinct_keys(r)}, {"closings", alternatives}}},
      {"bounds", bounds_json(r.bounds, opts.precision_bits)},
  };
  if (!r.veering.veering) j["veering"]["reason"] = r.veering.reason;
  if (opts.timing) j["timing"] = {{"seconds", r.seconds}};
  return j;
}

}  // namespace veer::cli
