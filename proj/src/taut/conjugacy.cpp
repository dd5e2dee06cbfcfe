#include "veer/taut/conjugacy.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace veer::taut {

namespace {

std::vector<mpz_class> primitive_integers(const std::vector<mpq_class>& w) {
  mpz_class l = 1, g = 0;
  for (const auto& x : w) l = lcm(l, x.get_den());
  std::vector<mpz_class> out;
  for (const auto& x : w) {
    mpz_class v = x.get_num() * (l / x.get_den());
    g = gcd(g, v);
    out.push_back(v);
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

std::string encode_from(const TautTriangulation3& t, const std::vector<std::array<int, 4>>& ids,
                        const std::vector<mpz_class>& w, int start, const Perm4& sigma0, const std::string& best) {
  const int n = t.size();
  std::vector<int> order{start}, number(n, -1);
  std::vector<Perm4> sigma(n);
  number[start] = 0;
  sigma[start] = sigma0;
  std::string out = std::to_string(n) + ";";
  for (std::size_t q = 0; q < order.size(); ++q) {
    const int ti = order[q];
    const Tetrahedron& tet = t.tets[ti];
    const Perm4 inv = inverse(sigma[ti]);
    {
      auto [a, b] = edge_vertices(tet.pi);
      int e = edge_index(sigma[ti][a], sigma[ti][b]);
      out += "p" + std::to_string(std::min(e, 5 - e));
    }
    for (int nf = 0; nf < 4; ++nf) {
      const int f = inv[nf];
      const int u = tet.neighbor[f];
      const Perm4& p = tet.gluing[f];
      if (number[u] < 0) {
        number[u] = static_cast<int>(order.size());
        sigma[u] = compose(sigma[ti], inverse(p));
        order.push_back(u);
      }
      Perm4 np = compose(sigma[u], compose(p, inv));
      out += "|" + std::to_string(number[u]) + "." + std::to_string(perm_index(np)) + (tet.outward[f] ? "O" : "I") +
             w[ids[ti][f]].get_str();
    }
    out += ";";
    // prune: this start can no longer beat the best one
    if (!best.empty() && out.compare(0, out.size(), best, 0, out.size()) > 0) return {};
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("triangulation is not connected");
  return out;
}

}  // namespace

std::string ConjugacyKey::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

ConjugacyKey conjugacy_key(const TautTriangulation3& t, const FiberCycle& c) {
  if (static_cast<int>(c.weights.size()) != t.num_faces()) throw std::invalid_argument("cycle does not match triangulation");
  auto ids = t.face_ids();
  auto w = primitive_integers(c.weights);
  std::string best;
  for (int start = 0; start < t.size(); ++start)
    for (int i = 0; i < 24; ++i) {
      std::string s = encode_from(t, ids, w, start, perm_from_index(i), best);
      if (!s.empty() && (best.empty() || s < best)) best = std::move(s);
    }
  return {best};
}

bool compare_conjugacy(const ConjugacyKey& a, const ConjugacyKey& b) { return a.text == b.text; }

}  // namespace veer::taut
