#pragma once

// Reference computations used to check the library. They work from the
// token sequence directly, with linear (rotated) orders in place of cyclic
// arc tests, and brute force wherever the library searches.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/graph.hpp"
#include "vknot/laurent.hpp"

namespace oracle {

struct Chord {
  std::size_t over;
  std::size_t under;
  int sign;
};

inline std::map<std::int64_t, Chord> chords(const vknot::GaussDiagram& d) {
  std::map<std::int64_t, Chord> out;
  for (std::size_t p = 0; p < d.length(); ++p) {
    auto& c = out[d.at(p).chord.value];
    (d.at(p).role == vknot::Role::Over ? c.over : c.under) = p;
    c.sign = vknot::value(d.sign(d.at(p).chord));
  }
  return out;
}

/// Chords cross iff exactly one endpoint of b falls strictly between the
/// endpoints of a in the linear order.
inline bool cross(const Chord& a, const Chord& b) {
  auto lo = std::min(a.over, a.under);
  auto hi = std::max(a.over, a.under);
  auto inside = [&](std::size_t p) { return p > lo && p < hi; };
  return inside(b.over) != inside(b.under);
}

/// Reading the circle from head(c), x crosses c left to right iff its tail
/// comes before tail(c).
inline int sense(const Chord& c, const Chord& x, std::size_t len) {
  auto rel = [&](std::size_t p) { return (p + len - c.under) % len; };
  return rel(x.over) < rel(c.over) ? 1 : -1;
}

/// Ind(c) = r+ - r- - l+ + l-.
inline std::map<std::int64_t, int> indices(const vknot::GaussDiagram& d) {
  auto cs = chords(d);
  std::map<std::int64_t, int> idx;
  for (const auto& [c, cc] : cs) {
    int r_plus = 0, r_minus = 0, l_plus = 0, l_minus = 0;
    for (const auto& [x, xx] : cs) {
      if (x == c || !cross(cc, xx)) continue;
      bool left_to_right = sense(cc, xx, d.length()) == 1;
      if (left_to_right)
        (xx.sign > 0 ? r_plus : r_minus)++;
      else
        (xx.sign > 0 ? l_plus : l_minus)++;
    }
    idx[c] = r_plus - r_minus - l_plus + l_minus;
  }
  return idx;
}

/// Writhe polynomial as an exponent -> coefficient map without zero entries.
inline std::map<std::int64_t, std::int64_t> writhe_poly(const vknot::GaussDiagram& d) {
  auto cs = chords(d);
  auto idx = indices(d);
  std::map<std::int64_t, std::int64_t> w;
  for (const auto& [c, cc] : cs) {
    w[idx[c]] += cc.sign;
    w[0] -= cc.sign;
  }
  std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
  return w;
}

inline std::map<std::int64_t, std::int64_t> terms(const vknot::LaurentPolynomial& f) {
  return {f.terms().begin(), f.terms().end()};
}

/// Dense adjacency counts and signs indexed by sorted vertex order.
struct Dense {
  std::vector<int> sign;
  std::vector<std::vector<int>> adj;
};

inline Dense dense(const vknot::IntersectionGraph& g) {
  Dense m;
  std::map<vknot::VertexId, std::size_t> pos;
  for (const auto& [v, s] : g.vertices()) {
    pos[v] = m.sign.size();
    m.sign.push_back(vknot::value(s));
  }
  m.adj.assign(m.sign.size(), std::vector<int>(m.sign.size(), 0));
  for (const auto& [key, k] : g.edges()) m.adj[pos[key.first]][pos[key.second]] += k;
  return m;
}

/// Tries every vertex bijection.
inline bool isomorphic(const vknot::IntersectionGraph& a, const vknot::IntersectionGraph& b) {
  auto ma = dense(a);
  auto mb = dense(b);
  if (ma.sign.size() != mb.sign.size()) return false;
  std::vector<std::size_t> perm(ma.sign.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      ok = ma.sign[i] == mb.sign[perm[i]];
      for (std::size_t j = 0; j < perm.size() && ok; ++j) ok = ma.adj[i][j] == mb.adj[perm[i]][perm[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Index of each vertex from the dense matrix: in-signs minus out-signs.
inline std::vector<int> vertex_indices(const vknot::IntersectionGraph& g) {
  auto m = dense(g);
  std::vector<int> idx(m.sign.size(), 0);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) idx[i] += m.adj[j][i] * m.sign[j] - m.adj[i][j] * m.sign[j];
  return idx;
}

inline std::map<std::int64_t, std::int64_t> graph_writhe_poly(const vknot::IntersectionGraph& g) {
  auto m = dense(g);
  auto idx = oracle::vertex_indices(g);
  std::map<std::int64_t, std::int64_t> w;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    w[idx[i]] += m.sign[i];
    w[0] -= m.sign[i];
  }
  std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
  return w;
}

}  // namespace oracle
