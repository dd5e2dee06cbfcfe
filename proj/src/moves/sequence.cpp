#include "veer/moves/sequence.hpp"

#include "veer/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace veer::moves {

using algebra::AlgebraicNumber;
using algebra::IntegerMatrix;

namespace {

using Key = std::pair<std::vector<int>, std::vector<std::string>>;

std::string commas(std::string s) {
  std::replace(s.begin(), s.end(), ' ', ',');
  return s;
}

PeriodicityCertificate certify(const SplittingSequence& seq, const std::vector<CanonicalForm>& forms, int n, int m) {
  const TrainTrack& t0 = seq.tracks[n];
  const Measure& mu0 = seq.measures[n];
  const Measure& mu1 = seq.measures[n + m];
  PeriodicityCertificate c;
  c.n = n;
  c.m = m;
  for (int i = n; i < n + m; ++i) c.splits += static_cast<int>(seq.batches[i].size());
  c.iso = isomorphism_between(t0, forms[n], seq.tracks[n + m], forms[n + m]);
  c.scale = mu1[c.iso.branch_map[0]] / mu0[0];
  for (int b = 0; b < t0.num_branches(); ++b)
    if (!(mu1[c.iso.branch_map[b]] == c.scale * mu0[b]))
      throw std::logic_error("periodicity certificate: measures are not proportional at branch " + std::to_string(b));

  std::set<int> split_ids;
  for (int i = n; i < n + m; ++i)
    for (const auto& r : seq.batches[i]) split_ids.insert(r.branch);
  // An unsplit branch keeps its id through the period and is then relabeled
  // by iso, so a branch is eventually split iff its iso-orbit meets split_ids.
  for (int b = 0; b < t0.num_branches(); ++b) {
    int x = b;
    bool hit = false;
    for (int k = 0; k < t0.num_branches() && !hit; ++k, x = c.iso.branch_map[x]) hit = split_ids.count(x) > 0;
    if (!hit) throw std::logic_error("periodicity certificate: branch " + std::to_string(b) + " is never split");
  }

  c.transition = transition_matrix(seq, n, m, c.iso);
  // The transition matrix need not be primitive in branch coordinates (the
  // switch conditions cut the weight space down), so lambda = 1 / scale is
  // certified directly: it must be the largest real eigenvalue, and the
  // period-start measure must be its eigenvector.
  if (compare(c.scale, AlgebraicNumber(c.scale.field(), mpq_class(1))) != algebra::Ordering::Less)
    throw std::logic_error("periodicity certificate: scale is not below 1");
  AlgebraicNumber lambda = c.scale.inverse();
  auto spectral = algebra::spectral_radius_factor(c.transition);
  if (!algebra::is_spectral_root(spectral, lambda))
    throw std::logic_error("periodicity certificate: 1 / scale is not the spectral radius of the transition matrix");
  auto image = algebra::multiply(c.transition, mu0.weights);
  for (int b = 0; b < t0.num_branches(); ++b)
    if (!(image[b] == lambda * mu0[b]))
      throw std::logic_error("periodicity certificate: period-start measure is not the PF eigenvector");
  c.pf.minpoly = spectral.factor;
  c.pf.field = lambda.field();
  c.pf.lambda = lambda;
  auto inv = mu0[0].inverse();
  for (const auto& w : mu0.weights) c.pf.vector.push_back(w * inv);
  return c;
}

void step(SplittingSequence& seq) {
  BatchResult next = maximal_split(seq.tracks.back(), seq.measures.back());
  seq.tracks.push_back(std::move(next.track));
  seq.measures.push_back(std::move(next.measure));
  seq.batches.push_back(std::move(next.batch));
}

}  // namespace

std::vector<IntegerMatrix> fold_factors(const SplittingSequence& seq, int n, int m) {
  std::vector<IntegerMatrix> out;
  const int e = seq.tracks[n].num_branches();
  for (int i = n; i < n + m; ++i)
    for (const auto& r : seq.batches[i]) out.push_back(fold_matrix(e, r));
  return out;
}

IntegerMatrix transition_matrix(const SplittingSequence& seq, int n, int m, const TrackIsomorphism& iso) {
  const int e = seq.tracks[n].num_branches();
  IntegerMatrix prod = IntegerMatrix::identity(e);
  for (const auto& f : fold_factors(seq, n, m)) prod = prod * f;
  IntegerMatrix q(e);
  for (int b = 0; b < e; ++b) q(iso.branch_map[b], b) = 1;
  return prod * q;
}

RunResult run_sequence(const TrainTrack& t, const Measure& mu, int max_steps, int period_multiple) {
  if (period_multiple < 1) throw Error(ErrorCode::BadParameters, "period multiple must be positive");
  track::validate(t);
  track::validate_measure(t, mu);
  RunResult out;
  auto& seq = out.sequence;
  std::vector<CanonicalForm> forms;
  std::map<Key, int> seen;
  seq.tracks.push_back(t);
  seq.measures.push_back(mu);
  for (int i = 0;; ++i) {
    forms.push_back(canonical_form(seq.tracks[i], seq.measures[i]));
    Key key{forms[i].structure, forms[i].weights};
    auto [it, inserted] = seen.emplace(std::move(key), i);
    if (!inserted) {
      const int n = it->second, m = std::lcm(i - n, period_multiple);
      for (int j = i; j < n + m; ++j) {
        step(seq);
        forms.push_back(canonical_form(seq.tracks[j + 1], seq.measures[j + 1]));
      }
      out.certificate = certify(seq, forms, n, m);
      return out;
    }
    if (i >= max_steps) return out;
    step(seq);
  }
}

std::string dump_sequence(const RunResult& run) {
  SequenceDump d;
  const auto& seq = run.sequence;
  for (int i = 0; i < static_cast<int>(seq.tracks.size()); ++i) {
    SequenceDump::Step s{i, {}, {}};
    if (i < seq.steps())
      for (const auto& r : seq.batches[i])
        s.batch.push_back(std::to_string(r.branch) + (r.kind == MoveKind::SplitLeft ? "L" : "R"));
    for (int b = 0; b < static_cast<int>(seq.measures[i].size()); ++b)
      s.weights.emplace_back(b, commas(seq.measures[i][b].to_string()));
    d.steps.push_back(std::move(s));
  }
  if (run.certificate) {
    const auto& c = *run.certificate;
    SequenceDump::Period p{c.n, c.m, commas(c.scale.to_string()), {}};
    for (int b = 0; b < static_cast<int>(c.iso.branch_map.size()); ++b) p.iso.emplace_back(b, c.iso.branch_map[b]);
    d.period = std::move(p);
  }
  return write_sequence_dump(d);
}

std::string write_sequence_dump(const SequenceDump& d) {
  std::ostringstream os;
  for (const auto& s : d.steps) {
    os << "step " << s.index << " | batch";
    if (s.batch.empty()) os << " -";
    for (const auto& b : s.batch) os << ' ' << b;
    os << " | weights";
    for (const auto& [b, w] : s.weights) os << ' ' << b << ':' << w;
    os << '\n';
  }
  if (d.period) {
    os << "period n=" << d.period->n << " m=" << d.period->m << " scale=" << d.period->scale << " iso=";
    for (std::size_t i = 0; i < d.period->iso.size(); ++i)
      os << (i ? "," : "") << d.period->iso[i].first << ':' << d.period->iso[i].second;
    os << '\n';
  }
  return os.str();
}

SequenceDump parse_sequence_dump(const std::string& text) {
  SequenceDump d;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) { throw ParseError(lineno, why); };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size()) fail("bad integer '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad integer '" + s + "'");
    }
    return 0;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "step") {
      SequenceDump::Step s;
      std::string tok;
      ls >> tok;
      s.index = to_int(tok);
      if (!(ls >> tok) || tok != "|" || !(ls >> tok) || tok != "batch") fail("expected '| batch'");
      while (ls >> tok && tok != "|")
        if (tok != "-") s.batch.push_back(tok);
      if (tok != "|" || !(ls >> tok) || tok != "weights") fail("expected '| weights'");
      while (ls >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) fail("bad weight '" + tok + "'");
        s.weights.emplace_back(to_int(tok.substr(0, colon)), tok.substr(colon + 1));
      }
      d.steps.push_back(std::move(s));
    } else if (kw == "period") {
      SequenceDump::Period p{};
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) fail("bad period field '" + tok + "'");
        std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "n") p.n = to_int(v);
        else if (k == "m") p.m = to_int(v);
        else if (k == "scale") p.scale = v;
        else if (k == "iso") {
          std::istringstream is(v);
          for (std::string pair; std::getline(is, pair, ',');) {
            auto colon = pair.find(':');
            if (colon == std::string::npos) fail("bad iso pair '" + pair + "'");
            p.iso.emplace_back(to_int(pair.substr(0, colon)), to_int(pair.substr(colon + 1)));
          }
        } else {
          fail("unknown period field '" + k + "'");
        }
      }
      d.period = std::move(p);
    } else {
      fail("unknown line '" + kw + "'");
    }
  }
  return d;
}

}  // namespace veer::moves
