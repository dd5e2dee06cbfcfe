#include "veer/taut/taut_io.hpp"

#include "veer/error.hpp"

#include <map>
#include <sstream>

namespace veer::taut {

namespace {

const char* const kPiNames[3] = {"01/23", "02/13", "03/12"};

std::string perm_string(const Perm4& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}

Perm4 parse_perm(const std::string& s, std::size_t line) {
  Perm4 p{};
  int seen = 0;
  if (s.size() != 4) throw ParseError(line, "bad permutation '" + s + "'");
  for (int i = 0; i < 4; ++i) {
    int v = s[i] - '0';
    if (v < 0 || v > 3 || (seen >> v & 1)) throw ParseError(line, "bad permutation '" + s + "'");
    seen |= 1 << v;
    p[i] = v;
  }
  return p;
}

int parse_pi(const std::string& s, std::size_t line) {
  for (int i = 0; i < 3; ++i)
    if (s == kPiNames[i]) return i;
  throw ParseError(line, "bad pi edge pair '" + s + "' (expected 01/23, 02/13 or 03/12)");
}

int parse_int(const std::string& s, std::size_t line, const char* what) {
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

mpq_class parse_weight(const std::string& s, std::size_t line) {
  try {
    mpq_class q(s);
    if (q.get_den() == 0) throw std::invalid_argument(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw ParseError(line, "bad weight '" + s + "'");
  }
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

void expect(const std::vector<std::string>& tok, std::size_t i, const char* word, std::size_t line) {
  if (i >= tok.size() || tok[i] != word) throw ParseError(line, std::string("expected '") + word + "'");
}

// Gluings must be mutually inverse and coorientations present; checked
// after all tetrahedra are read.
void check_gluings(const TautTriangulation3& t, const std::vector<std::size_t>& lines) {
  for (int i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      int u = t.tets[i].neighbor[f];
      if (u < 0 || u >= t.size()) throw ParseError(lines[i], "neighbour " + std::to_string(u) + " does not exist");
      const Perm4& p = t.tets[i].gluing[f];
      const Tetrahedron& o = t.tets[u];
      if (o.neighbor[p[f]] != i || o.gluing[p[f]] != inverse(p))
        throw ParseError(lines[i], "face " + std::to_string(f) + " gluing is not matched by tetrahedron " + std::to_string(u));
    }
}

struct Pending {
  std::map<int, std::pair<int, std::size_t>> degree;  // edge -> (degree, line)
  std::map<int, Color> colors;
  std::map<int, std::pair<mpq_class, std::size_t>> weights;
};

TriangulationFile finish(TriangulationFile out, const std::vector<std::size_t>& lines, const Pending& p) {
  if (out.tri.tets.empty()) throw ParseError(0, "no tetrahedra");
  check_gluings(out.tri, lines);
  auto classes = out.tri.edge_classes();
  for (const auto& [e, d] : p.degree) {
    if (e >= static_cast<int>(classes.size())) throw ParseError(d.second, "edge " + std::to_string(e) + " does not exist");
    if (static_cast<int>(classes[e].size()) != d.first)
      throw ParseError(d.second, "edge " + std::to_string(e) + " has degree " + std::to_string(classes[e].size()));
  }
  if (!p.colors.empty()) {
    if (p.colors.size() != classes.size()) throw ParseError(0, "colors given for some edges only");
    std::vector<Color> cs;
    for (const auto& [e, c] : p.colors) cs.push_back(c);
    out.colors = std::move(cs);
  }
  if (!p.weights.empty()) {
    if (static_cast<int>(p.weights.size()) != out.tri.num_faces() || p.weights.rbegin()->first != out.tri.num_faces() - 1)
      throw ParseError(p.weights.rbegin()->second.second, "face weights must cover faces 0.." +
                                                             std::to_string(out.tri.num_faces() - 1));
    FiberCycle c;
    for (const auto& [f, w] : p.weights) c.weights.push_back(w.first);
    out.fiber = std::move(c);
  }
  return out;
}

}  // namespace

std::string write_triangulation(const TriangulationFile& f) {
  std::ostringstream os;
  const auto& t = f.tri;
  for (int i = 0; i < t.size(); ++i) {
    const Tetrahedron& tet = t.tets[i];
    os << "tet " << i << " nbr";
    for (int n : tet.neighbor) os << ' ' << n;
    os << " perm";
    for (const auto& p : tet.gluing) os << ' ' << perm_string(p);
    os << " coor ";
    for (bool o : tet.outward) os << (o ? 'O' : 'I');
    os << " pi " << kPiNames[tet.pi] << '\n';
  }
  auto classes = t.edge_classes();
  for (std::size_t e = 0; e < classes.size(); ++e) {
    os << "edge " << e << " degree " << classes[e].size();
    if (f.colors && e < f.colors->size()) os << " color " << ((*f.colors)[e] == Color::Left ? 'L' : 'R');
    os << '\n';
  }
  if (f.fiber)
    for (std::size_t i = 0; i < f.fiber->weights.size(); ++i) os << "face " << i << " weight " << f.fiber->weights[i].get_str() << '\n';
  return os.str();
}

TriangulationFile parse_triangulation(std::istream& in) {
  TriangulationFile out;
  std::vector<std::size_t> lines;
  Pending pending;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = tokens(raw);
    if (tok.empty()) continue;
    if (tok[0] == "tet") {
      if (tok.size() != 16) throw ParseError(lineno, "tet line needs 16 fields");
      int id = parse_int(tok[1], lineno, "tetrahedron id");
      if (id != out.tri.size()) throw ParseError(lineno, "tetrahedra must be numbered 0, 1, 2, ... in order");
      Tetrahedron tet;
      expect(tok, 2, "nbr", lineno);
      for (int f = 0; f < 4; ++f) tet.neighbor[f] = parse_int(tok[3 + f], lineno, "neighbour");
      expect(tok, 7, "perm", lineno);
      for (int f = 0; f < 4; ++f) tet.gluing[f] = parse_perm(tok[8 + f], lineno);
      expect(tok, 12, "coor", lineno);
      if (tok[13].size() != 4) throw ParseError(lineno, "coor needs four I/O letters");
      for (int f = 0; f < 4; ++f) {
        char c = tok[13][f];
        if (c != 'I' && c != 'O') throw ParseError(lineno, "coor needs four I/O letters");
        tet.outward[f] = c == 'O';
      }
      expect(tok, 14, "pi", lineno);
      tet.pi = parse_pi(tok[15], lineno);
      out.tri.tets.push_back(tet);
      lines.push_back(lineno);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 && tok.size() != 6) throw ParseError(lineno, "edge line is 'edge <id> degree <d> [color L|R]'");
      int id = parse_int(tok[1], lineno, "edge id");
      expect(tok, 2, "degree", lineno);
      pending.degree[id] = {parse_int(tok[3], lineno, "degree"), lineno};
      if (tok.size() == 6) {
        expect(tok, 4, "color", lineno);
        if (tok[5] != "L" && tok[5] != "R") throw ParseError(lineno, "color must be L or R");
        pending.colors[id] = tok[5] == "L" ? Color::Left : Color::Right;
      }
    } else if (tok[0] == "face") {
      if (tok.size() != 4) throw ParseError(lineno, "face line is 'face <id> weight <p/q>'");
      int id = parse_int(tok[1], lineno, "face id");
      expect(tok, 2, "weight", lineno);
      if (!pending.weights.emplace(id, std::make_pair(parse_weight(tok[3], lineno), lineno)).second)
        throw ParseError(lineno, "face " + std::to_string(id) + " given twice");
    } else {
      throw ParseError(lineno, "unknown record '" + tok[0] + "'");
    }
  }
  return finish(std::move(out), lines, pending);
}

TriangulationFile parse_triangulation_string(const std::string& text) {
  std::istringstream is(text);
  return parse_triangulation(is);
}

nlohmann::json triangulation_to_json(const TriangulationFile& f) {
  using nlohmann::json;
  json tets = json::array();
  for (int i = 0; i < f.tri.size(); ++i) {
    const Tetrahedron& t = f.tri.tets[i];
    json perms = json::array();
    for (const auto& p : t.gluing) perms.push_back(perm_string(p));
    std::string coor;
    for (bool o : t.outward) coor += o ? 'O' : 'I';
    tets.push_back({{"id", i}, {"neighbors", t.neighbor}, {"gluings", perms}, {"coorientation", coor}, {"pi", kPiNames[t.pi]}});
  }
  json edges = json::array();
  auto classes = f.tri.edge_classes();
  for (std::size_t e = 0; e < classes.size(); ++e) {
    json edge = {{"id", e}, {"degree", classes[e].size()}};
    if (f.colors && e < f.colors->size()) edge["color"] = (*f.colors)[e] == Color::Left ? "L" : "R";
    edges.push_back(edge);
  }
  json out = {{"tetrahedra", tets}, {"edges", edges}};
  if (f.fiber) {
    json faces = json::array();
    for (std::size_t i = 0; i < f.fiber->weights.size(); ++i) faces.push_back({{"id", i}, {"weight", f.fiber->weights[i].get_str()}});
    out["faces"] = faces;
  }
  return out;
}

TriangulationFile triangulation_from_json(const nlohmann::json& j) {
  // Rebuild the text form and reuse its checks.
  std::ostringstream os;
  try {
    for (const auto& t : j.at("tetrahedra")) {
      os << "tet " << t.at("id").get<int>() << " nbr";
      for (const auto& n : t.at("neighbors")) os << ' ' << n.get<int>();
      os << " perm";
      for (const auto& p : t.at("gluings")) os << ' ' << p.get<std::string>();
      os << " coor " << t.at("coorientation").get<std::string>() << " pi " << t.at("pi").get<std::string>() << '\n';
    }
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        os << "edge " << e.at("id").get<int>() << " degree " << e.at("degree").get<int>();
        if (e.contains("color")) os << " color " << e.at("color").get<std::string>();
        os << '\n';
      }
    if (j.contains("faces"))
      for (const auto& f : j.at("faces")) os << "face " << f.at("id").get<int>() << " weight " << f.at("weight").get<std::string>() << '\n';
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed triangulation JSON: ") + e.what());
  }
  return parse_triangulation_string(os.str());
}

}  // namespace veer::taut
