// Thin bindings: inputs and outputs are words, file texts and JSON strings,
// so the Python side never holds exact numbers directly.

#include "veer/bounds/bounds.hpp"
#include "veer/cli/pipeline.hpp"
#include "veer/cli/seed.hpp"
#include "veer/error.hpp"
#include "veer/moves/sequence.hpp"
#include "veer/taut/taut_io.hpp"
#include "veer/track/track_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace veer;

namespace {

cli::PipelineOptions options(int max_steps, unsigned bits, bool timing) {
  cli::PipelineOptions o;
  o.max_steps = max_steps;
  o.precision_bits = bits;
  o.timing = timing;
  return o;
}

std::string report(const cli::PipelineResult& r, const cli::PipelineOptions& o, bool with_triangulation) {
  auto j = cli::report_json(r, o);
  if (with_triangulation) {
    taut::TriangulationFile f{r.tri, std::nullopt, r.fiber};
    if (r.veering.veering) f.colors = r.veering.colors;
    j["triangulation"] = taut::write_triangulation(f);
  }
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_veer, m) {
  m.doc() = "train track splitting sequences and layered veering triangulations";

  static py::exception<Error> domain_error(m, "VeerError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", domain_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse) py::set_error(parse_error, e.what());
      else py::set_error(domain_error, e.what());
    }
  });

  m.attr("SCHEMA") = cli::kRunReportSchema;

  m.def(
      "run_word_json",
      [](const std::string& word, int max_steps, unsigned bits, bool timing, bool triangulation) {
        auto o = options(max_steps, bits, timing);
        return report(cli::run_word(word, o), o, triangulation);
      },
      py::arg("word"), py::arg("max_steps") = 10000, py::arg("precision_bits") = 64, py::arg("timing") = false,
      py::arg("triangulation") = false);

  m.def(
      "run_track_json",
      [](const std::string& text, int max_steps, unsigned bits, bool timing, bool triangulation) {
        auto file = track::parse_track_string(text);
        if (!file.measure) throw Error(ErrorCode::BadParameters, "track has no weights");
        auto o = options(max_steps, bits, timing);
        return report(cli::run_pipeline(file.track, *file.measure, "track text", o), o, triangulation);
      },
      py::arg("text"), py::arg("max_steps") = 10000, py::arg("precision_bits") = 64, py::arg("timing") = false,
      py::arg("triangulation") = false);

  m.def(
      "seed_torus",
      [](const std::string& word) {
        auto seed = cli::seed_punctured_torus(word);
        return track::write_track(track::TrackFile{seed.track, seed.pf.field, seed.measure, std::nullopt});
      },
      py::arg("word"));

  m.def(
      "validate_track",
      [](const std::string& text) {
        auto file = track::parse_track_string(text);
        auto s = track::validate(file.track);
        py::dict d;
        d["genus"] = s.genus;
        d["punctures"] = s.punctures;
        d["euler_characteristic"] = s.euler_characteristic;
        d["switches"] = file.track.num_switches();
        d["branches"] = file.track.num_branches();
        return d;
      },
      py::arg("text"));

  m.def(
      "conjugacy_key",
      [](const std::string& triangulation_text) {
        auto f = taut::parse_triangulation_string(triangulation_text);
        if (!f.fiber) throw Error(ErrorCode::BadParameters, "triangulation has no face weights");
        return taut::conjugacy_key(f.tri, *f.fiber).text;
      },
      py::arg("triangulation_text"));

  m.def(
      "tetrahedra_bound_two_plus_sqrt3_squared",
      [] { return bounds::tetrahedra_bound(bounds::two_plus_sqrt3_squared()).get_str(); });
}
