// veer: command-line front end. Exit status 0 on success, 1 on domain
// errors, 2 on parse errors (including bad command lines), 3 on internal
// failures.

#include "veer/bounds/bounds.hpp"
#include "veer/cli/pipeline.hpp"
#include "veer/cli/seed.hpp"
#include "veer/error.hpp"
#include "veer/moves/sequence.hpp"
#include "veer/taut/taut_io.hpp"
#include "veer/track/track_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace veer;

struct Common {
  std::string input;
  std::string word;
  int max_steps = 10000;
  unsigned precision_bits = 64;
  std::string format = "text";
  std::string out;
  bool no_timing = false;
};

void add_source(CLI::App* cmd, Common& c) {
  auto* in = cmd->add_option("--input", c.input, "track file with a measure");
  auto* w = cmd->add_option("--word", c.word, "punctured-torus word over {R,L}");
  in->excludes(w);
  cmd->add_option("--max-steps", c.max_steps, "maximal splits before giving up")->check(CLI::PositiveNumber);
  cmd->add_option("--precision-bits", c.precision_bits, "bits for decimal renderings")->check(CLI::Range(8u, 4096u));
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out, "write the main artifact here instead of stdout");
  cmd->add_flag("--no-timing", c.no_timing, "omit wall-clock timing so reports are byte-reproducible");
}

struct Source {
  track::TrainTrack track;
  track::Measure measure;
  std::string descriptor;
  int period_multiple = 1;
};

Source load_source(const Common& c) {
  if (!c.word.empty()) {
    auto seed = cli::seed_punctured_torus(c.word);
    return {seed.track, seed.measure, "word " + c.word, static_cast<int>(c.word.size())};
  }
  if (c.input.empty()) throw CLI::ValidationError("one of --input or --word is required");
  auto file = track::read_track_file(c.input);
  if (!file.measure) throw Error(ErrorCode::BadParameters, c.input + " has no weights");
  return {file.track, *file.measure, "file " + c.input, 1};
}

cli::PipelineOptions pipeline_options(const Common& c, int multiple) {
  cli::PipelineOptions o;
  o.max_steps = c.max_steps;
  o.period_multiple = multiple;
  o.precision_bits = c.precision_bits;
  o.timing = !c.no_timing;
  return o;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_validate(const Common& c) {
  if (!c.word.empty()) throw CLI::ValidationError("validate takes --input");
  auto file = track::read_track_file(c.input);
  auto summary = track::validate(file.track);
  auto excluded = track::check_excluded(file.track);
  std::vector<std::string> problems;
  if (file.surface && (file.surface->first != summary.genus || file.surface->second != summary.punctures))
    problems.push_back("declared surface " + std::to_string(file.surface->first) + " " +
                       std::to_string(file.surface->second) + " but the track fills genus " +
                       std::to_string(summary.genus) + " with " + std::to_string(summary.punctures) + " punctures");
  for (const auto& v : excluded)
    problems.push_back(std::string(v.kind == track::ExcludedViolation::Kind::IsolatedMonogon ? "isolated monogon"
                                                                                              : "one-sided small branch") +
                       " at branch " + std::to_string(v.branch));
  std::string measure_error;
  if (file.measure) {
    try {
      track::validate_measure(file.track, *file.measure);
    } catch (const Error& e) {
      problems.push_back(e.what());
    }
  }
  if (c.format == "json") {
    json regions = json::array();
    for (const auto& r : summary.regions) regions.push_back({{"cusps", r.cusps}, {"punctured", r.punctured}});
    json j = {{"genus", summary.genus},
              {"punctures", summary.punctures},
              {"euler_characteristic", summary.euler_characteristic},
              {"switches", file.track.num_switches()},
              {"branches", file.track.num_branches()},
              {"measured", file.measure.has_value()},
              {"regions", regions},
              {"violations", problems}};
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "genus " << summary.genus << " punctures " << summary.punctures << " chi " << summary.euler_characteristic
       << "\nswitches " << file.track.num_switches() << " branches " << file.track.num_branches() << "\n";
    for (std::size_t i = 0; i < summary.regions.size(); ++i)
      os << "region " << i << " cusps " << summary.regions[i].cusps << (summary.regions[i].punctured ? " punctured" : "")
         << "\n";
    for (const auto& p : problems) os << "violation " << p << "\n";
    os << (problems.empty() ? "valid\n" : "invalid\n");
    emit(c, os.str());
  }
  return problems.empty() ? 0 : 1;
}

int cmd_run(const Common& c) {
  auto src = load_source(c);
  auto run = moves::run_sequence(src.track, src.measure, c.max_steps, src.period_multiple);
  if (c.format == "json") {
    json j = {{"input", src.descriptor}, {"dump", moves::dump_sequence(run)}};
    if (run.certificate) {
      const auto& cert = *run.certificate;
      j["certificate"] = {{"n", cert.n},
                          {"m", cert.m},
                          {"splits", cert.splits},
                          {"scale", cli::exact_json(cert.scale, c.precision_bits)},
                          {"switch_map", cert.iso.switch_map},
                          {"branch_map", cert.iso.branch_map},
                          {"transition", cert.transition.to_string()},
                          {"lambda", cli::exact_json(cert.pf.lambda, c.precision_bits)}};
    } else {
      j["certificate"] = nullptr;
    }
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, moves::dump_sequence(run));
  }
  if (!run.certificate) {
    std::cerr << "NoPeriod: no period within " << c.max_steps << " maximal splits\n";
    return 1;
  }
  return 0;
}

int cmd_triangulate(const Common& c) {
  auto src = load_source(c);
  auto opts = pipeline_options(c, src.period_multiple);
  auto r = cli::run_pipeline(src.track, src.measure, src.descriptor, opts);
  taut::TriangulationFile file{r.tri, std::nullopt, r.fiber};
  if (r.veering.veering) file.colors = r.veering.colors;
  json report = cli::report_json(r, opts);
  if (c.format == "json") {
    json j = report;
    j["triangulation"] = taut::triangulation_to_json(file);
    emit(c, j.dump(2) + "\n");
    return 0;
  }
  // text: the triangulation file, then the report summary as comment lines
  std::ostringstream os;
  os << taut::write_triangulation(file);
  const auto& cert = *r.run.certificate;
  os << "# input " << r.input << "\n"
     << "# minpoly " << algebra::to_pretty_string(cert.pf.minpoly) << "\n"
     << "# lambda " << cert.pf.lambda.to_decimal(static_cast<int>(c.precision_bits * 30103 / 100000)) << "\n"
     << "# period n " << cert.n << " m " << cert.m << " splits " << cert.splits << "\n"
     << "# tetrahedra " << r.tri.size() << " edges " << r.edges << " cusps " << r.cusps << "\n"
     << "# veering " << (r.veering.veering ? "yes" : "no") << " reverse " << (r.reverse_veering ? "yes" : "no")
     << "\n"
     << "# conjugacy " << r.key.digest() << "\n"
     << "# closings " << r.alternatives.size() << " distinct keys " << cli::distinct_keys(r) << "\n";
  emit(c, os.str());
  return 0;
}

int cmd_dilatation(const Common& c) {
  auto src = load_source(c);
  auto run = moves::run_sequence(src.track, src.measure, c.max_steps, src.period_multiple);
  if (!run.certificate) throw Error(ErrorCode::NoPeriod, "no period within " + std::to_string(c.max_steps) + " maximal splits");
  const auto& lambda = run.certificate->pf.lambda;
  if (c.format == "json") {
    json j = {{"input", src.descriptor},
              {"minpoly", algebra::to_coeff_string(run.certificate->pf.minpoly)},
              {"lambda", cli::exact_json(lambda, c.precision_bits)}};
    emit(c, j.dump(2) + "\n");
  } else {
    auto iv = algebra::approx(lambda, c.precision_bits);
    int digits = static_cast<int>(c.precision_bits * 30103 / 100000) + 1;
    std::ostringstream os;
    os << "minpoly " << algebra::to_pretty_string(run.certificate->pf.minpoly) << "\n"
       << "interval [" << algebra::decimal_string(iv.lo, digits) << ", " << algebra::decimal_string(iv.hi, digits)
       << "]\n";
    emit(c, os.str());
  }
  return 0;
}

int cmd_bounds(const Common& c) {
  auto src = load_source(c);
  auto run = moves::run_sequence(src.track, src.measure, c.max_steps, src.period_multiple);
  if (!run.certificate) throw Error(ErrorCode::NoPeriod, "no period within " + std::to_string(c.max_steps) + " maximal splits");
  auto b = bounds::verify_inequality(run);
  if (c.format == "json") {
    emit(c, cli::bounds_json(b, c.precision_bits).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "genus " << b.genus << " punctures " << b.punctures << "\n"
       << "branches " << b.e << " bound " << b.branch_bound << (b.maximal ? " (maximal)" : "") << "\n"
       << "steps " << b.steps << " splits " << b.m << "\n"
       << "lambda^e - (2m+1) in [" << algebra::decimal_string(b.margin.lo, 6) << ", "
       << algebra::decimal_string(b.margin.hi, 6) << "]\n"
       << "psi exponent " << b.psi_exponent.get_str() << "\n";
    emit(c, os.str());
  }
  return 0;
}

// Conjugacy key from a RunReport (JSON with a "conjugacy" member) or a
// triangulation file in either format carrying face weights.
taut::ConjugacyKey load_key(const std::string& path) {
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  taut::TriangulationFile file;
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(0, path + " is not valid JSON");
    if (j.contains("conjugacy")) return taut::ConjugacyKey{j["conjugacy"].value("key", std::string())};
    file = taut::triangulation_from_json(j.contains("triangulation") ? j["triangulation"] : j);
  } else {
    file = taut::parse_triangulation_string(text);
  }
  if (!file.fiber) throw Error(ErrorCode::BadParameters, path + " has no face weights");
  return taut::conjugacy_key(file.tri, *file.fiber);
}

int cmd_compare(const std::vector<std::string>& files, const std::string& format) {
  auto a = load_key(files[0]), b = load_key(files[1]);
  bool same = taut::compare_conjugacy(a, b);
  if (format == "json")
    std::cout << json{{"conjugate", same}, {"digests", {a.digest(), b.digest()}}}.dump(2) << "\n";
  else
    std::cout << (same ? "conjugate" : "not conjugate") << "\n";
  return 0;
}

int cmd_seed(const Common& c) {
  auto seed = cli::seed_punctured_torus(c.word);
  track::TrackFile file{seed.track, seed.pf.field, seed.measure, std::nullopt};
  emit(c, track::write_track(file));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"veer: train track splitting sequences and veering triangulations"};
  app.require_subcommand(1);
  Common c;
  std::vector<std::string> compare_files;
  std::string compare_format = "text";

  auto* validate = app.add_subcommand("validate", "check a track file and summarize its surface");
  validate->add_option("--input", c.input, "track file")->required();
  validate->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  validate->add_option("--out", c.out);
  auto* run = app.add_subcommand("run", "maximal splitting sequence and periodicity certificate");
  add_source(run, c);
  auto* triangulate = app.add_subcommand("triangulate", "layered veering triangulation and run report");
  add_source(triangulate, c);
  auto* dilatation = app.add_subcommand("dilatation", "minimal polynomial and interval of the dilatation");
  add_source(dilatation, c);
  auto* bnds = app.add_subcommand("bounds", "check 2m + 1 <= lambda^e and the branch bound");
  add_source(bnds, c);
  auto* compare = app.add_subcommand("compare", "conjugacy verdict for two run reports or triangulation files");
  compare->add_option("files", compare_files, "two files")->required()->expected(2);
  compare->add_option("--format", compare_format)->check(CLI::IsMember({"text", "json"}));
  auto* seed = app.add_subcommand("seed-torus", "punctured-torus track file for a word");
  seed->add_option("--word", c.word, "word over {R,L}")->required();
  seed->add_option("--out", c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(c);
    if (*run) return cmd_run(c);
    if (*triangulate) return cmd_triangulate(c);
    if (*dilatation) return cmd_dilatation(c);
    if (*bnds) return cmd_bounds(c);
    if (*compare) return cmd_compare(compare_files, compare_format);
    if (*seed) return cmd_seed(c);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
