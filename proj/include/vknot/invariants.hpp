#pragma once

#include <map>

#include "vknot/diagram.hpp"
#include "vknot/graph.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

/// Ind(c) accumulated through a caller-supplied sense function. The library
/// uses crossing_sense; tests substitute faulty senses to check detection.
template <class SenseFn>
int chord_index_with(const GaussDiagram& d, ChordId c, SenseFn&& sense) {
  (void)d.chord(c);
  int idx = 0;
  for (const auto& [x, data] : d.chords()) {
    if (x == c || !interleaves(d, c, x)) continue;
    idx += sense(d, c, x) * value(data.sign);
  }
  return idx;
}

/// r+ - r- - l+ + l-: signed count of chords crossing `c`, weighted by direction.
inline int chord_index(const GaussDiagram& d, ChordId c) {
  return chord_index_with(d, c, [](const GaussDiagram& dd, ChordId a, ChordId b) { return crossing_sense(dd, a, b); });
}

inline int writhe(const GaussDiagram& d) {
  int w = 0;
  for (const auto& [id, c] : d.chords()) w += value(c.sign);
  return w;
}

struct ChordIndexEntry {
  Sign sign = Sign::Positive;
  int index = 0;

  friend bool operator==(const ChordIndexEntry&, const ChordIndexEntry&) = default;
};

struct IndexProfile {
  std::map<ChordId, ChordIndexEntry> chords;
  int writhe = 0;
};

inline IndexProfile index_profile(const GaussDiagram& d) {
  IndexProfile p;
  for (const auto& [id, c] : d.chords()) p.chords.emplace(id, ChordIndexEntry{c.sign, chord_index(d, id)});
  p.writhe = writhe(d);
  return p;
}

template <class SenseFn>
LaurentPolynomial writhe_polynomial_with(const GaussDiagram& d, SenseFn&& sense) {
  LaurentPolynomial w;
  for (const auto& [id, c] : d.chords()) {
    w.add_term(chord_index_with(d, id, sense), value(c.sign));
    w.add_term(0, -value(c.sign));
  }
  return w;
}

/// W(t) = sum over chords of w(c) t^Ind(c), minus the writhe.
inline LaurentPolynomial writhe_polynomial(const GaussDiagram& d) {
  return writhe_polynomial_with(d, [](const GaussDiagram& dd, ChordId a, ChordId b) { return crossing_sense(dd, a, b); });
}

/// The same polynomial read off an intersection graph through vertex indices.
inline LaurentPolynomial graph_writhe_polynomial(const IntersectionGraph& g) {
  LaurentPolynomial w;
  auto idx = vertex_indices(g);
  for (const auto& [v, s] : g.vertices()) {
    w.add_term(idx.at(v), value(s));
    w.add_term(0, -value(s));
  }
  return w;
}

/// f is a writhe polynomial of some virtual knot iff f(1) = 0 and f'(1) = 0.
inline bool is_realizable(const LaurentPolynomial& f) { return f.eval_at_one() == 0 && f.derivative_at_one() == 0; }

/// Decides equivalence under the bigon, isolated-vertex, pair and triangle
/// moves by comparing writhe polynomials. The answer carries knot-theoretic
/// meaning for graphs of virtual knot diagrams; on arbitrary signed digraphs
/// it is plain polynomial equality.
inline bool graphs_equivalent(const IntersectionGraph& a, const IntersectionGraph& b) {
  return graph_writhe_polynomial(a) == graph_writhe_polynomial(b);
}

}  // namespace vknot
