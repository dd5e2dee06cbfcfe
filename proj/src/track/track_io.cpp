#include "veer/track/track_io.hpp"

#include "veer/error.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace veer::track {

namespace {

using algebra::FieldPtr;
using algebra::NumberField;

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

int parse_id(const std::string& s, std::size_t line, const char* what) {
  std::size_t pos = 0;
  int v = -1;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || v < 0) throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  return v;
}

mpq_class parse_rational(const std::string& s, std::size_t line) {
  try {
    mpq_class q(s);
    if (q.get_den() == 0) throw std::invalid_argument(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw ParseError(line, "bad rational '" + s + "'");
  }
}

// "(sw,slot)"
Endpoint parse_endpoint(const std::string& s, std::size_t line) {
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw ParseError(line, "bad endpoint '" + s + "'");
  auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError(line, "bad endpoint '" + s + "'");
  int sw = parse_id(s.substr(1, comma - 1), line, "switch id");
  auto slot = parse_slot(s.substr(comma + 1, s.size() - comma - 2));
  if (!slot) throw ParseError(line, "bad slot in '" + s + "' (expected L, SL or SR)");
  return {sw, *slot};
}

struct BranchLine {
  Endpoint a, c;
  std::size_t line;
};

}  // namespace

TrackFile parse_track(std::istream& in) {
  std::set<int> switch_ids;
  std::map<int, BranchLine> branches;
  std::map<int, std::pair<std::string, std::size_t>> labels;
  std::vector<std::pair<int, std::size_t>> punctures;
  std::map<int, std::pair<std::vector<std::string>, std::size_t>> weights;
  TrackFile out;
  out.field = NumberField::rationals();
  bool have_field = false, have_surface = false;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    auto tok = split_ws(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "surface") {
      if (have_surface) throw ParseError(lineno, "duplicate surface line");
      have_surface = true;
      if (tok.size() == 2 && tok[1] == "auto") continue;
      if (tok.size() != 3) throw ParseError(lineno, "expected 'surface auto' or 'surface <genus> <punctures>'");
      out.surface = std::make_pair(parse_id(tok[1], lineno, "genus"), parse_id(tok[2], lineno, "puncture count"));
    } else if (kw == "field") {
      if (have_field) throw ParseError(lineno, "duplicate field line");
      if (tok.size() < 5) throw ParseError(lineno, "field needs at least two coefficients and an interval");
      std::vector<mpz_class> c;
      for (std::size_t i = 1; i + 2 < tok.size(); ++i) {
        try {
          c.emplace_back(tok[i]);
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad integer coefficient '" + tok[i] + "'");
        }
      }
      algebra::RatInterval iv{parse_rational(tok[tok.size() - 2], lineno), parse_rational(tok[tok.size() - 1], lineno)};
      try {
        out.field = NumberField::make(algebra::IntPolynomial(std::move(c)), iv);
      } catch (const std::exception& e) {
        throw ParseError(lineno, std::string("bad field descriptor: ") + e.what());
      }
      have_field = true;
    } else if (kw == "switch") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'switch <id>'");
      if (!switch_ids.insert(parse_id(tok[1], lineno, "switch id")).second)
        throw ParseError(lineno, "duplicate switch " + tok[1]);
    } else if (kw == "branch") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'branch <id> (<sw>,<slot>) (<sw>,<slot>)'");
      int id = parse_id(tok[1], lineno, "branch id");
      if (branches.count(id)) throw ParseError(lineno, "duplicate branch " + tok[1]);
      branches[id] = {parse_endpoint(tok[2], lineno), parse_endpoint(tok[3], lineno), lineno};
    } else if (kw == "label") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'label <branch-id> <text>'");
      labels[parse_id(tok[1], lineno, "branch id")] = {tok[2], lineno};
    } else if (kw == "puncture") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'puncture <region-index>'");
      punctures.emplace_back(parse_id(tok[1], lineno, "region index"), lineno);
    } else if (kw == "weight") {
      if (tok.size() < 3) throw ParseError(lineno, "expected 'weight <branch-id> <coefficients>'");
      int id = parse_id(tok[1], lineno, "branch id");
      if (weights.count(id)) throw ParseError(lineno, "duplicate weight for branch " + tok[1]);
      weights[id] = {std::vector<std::string>(tok.begin() + 2, tok.end()), lineno};
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }

  const int nsw = static_cast<int>(switch_ids.size());
  const int nbr = static_cast<int>(branches.size());
  if (nsw > 0 && *switch_ids.rbegin() != nsw - 1) throw ParseError(lineno, "switch ids must be 0..n-1");
  if (nbr > 0 && branches.rbegin()->first != nbr - 1) throw ParseError(lineno, "branch ids must be 0..n-1");

  TrainTrack t(nsw, nbr);
  std::set<std::pair<int, int>> used;
  for (const auto& [id, bl] : branches) {
    for (const Endpoint& p : {bl.a, bl.c}) {
      if (p.sw >= nsw) throw ParseError(bl.line, "undeclared switch " + std::to_string(p.sw));
      if (!used.insert({p.sw, index(p.slot)}).second)
        throw ParseError(bl.line, "slot " + std::string(slot_name(p.slot)) + " of switch " + std::to_string(p.sw) +
                                      " is already occupied");
    }
    t.connect(id, bl.a, bl.c);
  }
  for (const auto& [id, lab] : labels) {
    if (id >= nbr) throw ParseError(lab.second, "label for undeclared branch " + std::to_string(id));
    t.set_label(id, lab.first);
  }
  if (!punctures.empty()) {
    if (!t.is_complete()) throw ParseError(punctures.front().second, "punctures need a complete track");
    const int nreg = static_cast<int>(t.regions().size());
    for (auto [r, line] : punctures) {
      if (r >= nreg) throw ParseError(line, "no region " + std::to_string(r));
      t.puncture_region(r);
    }
  }
  if (!weights.empty()) {
    Measure mu;
    for (int b = 0; b < nbr; ++b) {
      auto it = weights.find(b);
      if (it == weights.end()) throw ParseError(lineno, "missing weight for branch " + std::to_string(b));
      const auto& [coeffs, line] = it->second;
      if (static_cast<int>(coeffs.size()) > std::max(1, out.field->degree()))
        throw ParseError(line, "weight has more coefficients than the field degree");
      std::vector<mpq_class> c;
      for (const auto& s : coeffs) c.push_back(parse_rational(s, line));
      mu.weights.emplace_back(out.field, algebra::RatPolynomial(std::move(c)));
    }
    if (static_cast<int>(weights.size()) != nbr) throw ParseError(lineno, "weight for undeclared branch");
    out.measure = std::move(mu);
  }
  out.track = std::move(t);
  return out;
}

TrackFile parse_track_string(const std::string& text) {
  std::istringstream is(text);
  return parse_track(is);
}

TrackFile read_track_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return parse_track(in);
}

std::string write_track(const TrackFile& file) {
  std::ostringstream os;
  if (file.surface)
    os << "surface " << file.surface->first << ' ' << file.surface->second << '\n';
  else
    os << "surface auto\n";
  const TrainTrack& t = file.track;
  if (file.measure) {
    const auto& f = file.measure->weights.empty() ? file.field : file.measure->weights[0].field();
    os << "field";
    for (const auto& c : f->minpoly().coeffs()) os << ' ' << c.get_str();
    os << ' ' << f->interval().lo.get_str() << ' ' << f->interval().hi.get_str() << '\n';
  }
  for (int s = 0; s < t.num_switches(); ++s) os << "switch " << s << '\n';
  for (int b = 0; b < t.num_branches(); ++b) {
    os << "branch " << b;
    for (int end = 0; end < 2; ++end) {
      Endpoint p = t.endpoint(b, end);
      os << " (" << p.sw << ',' << slot_name(p.slot) << ')';
    }
    os << '\n';
  }
  for (int b = 0; b < t.num_branches(); ++b)
    if (!t.label(b).empty()) os << "label " << b << ' ' << t.label(b) << '\n';
  if (t.is_complete()) {
    auto regions = t.regions();
    for (std::size_t r = 0; r < regions.size(); ++r)
      if (regions[r].punctured) os << "puncture " << r << '\n';
  }
  if (file.measure)
    for (int b = 0; b < t.num_branches(); ++b) os << "weight " << b << ' ' << (*file.measure)[b].to_string() << '\n';
  return os.str();
}

std::string write_track(const TrainTrack& t, const std::optional<Measure>& mu) {
  TrackFile f{t, mu && !mu->weights.empty() ? mu->weights[0].field() : algebra::NumberField::rationals(), mu, std::nullopt};
  return write_track(f);
}

}  // namespace veer::track
