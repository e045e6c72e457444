#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/graph.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/omega.hpp"
#include "vknot/trace.hpp"

namespace vknot {

struct FuzzOptions {
  std::size_t extra_chords = 6;       ///< diagrams may grow to n + extra_chords chords
  std::size_t extra_vertices = 10;    ///< the mirrored graph may grow to n + extra_vertices
  bool mirror_omega = true;           ///< interleave one random omega move per diagram move
  bool inject_sense_bug = false;      ///< negative control: the diagram-side polynomial uses one flipped sense
};

struct FuzzFailure {
  std::size_t step = 0;  ///< index into the trace
  std::string check;
  std::string detail;
};

struct FuzzReport {
  std::size_t n = 0;
  std::size_t moves = 0;
  std::uint64_t seed = 0;
  MoveTrace trace;
  std::vector<FuzzFailure> failures;
  std::map<std::string, std::size_t> counts;  ///< applied moves by kind name
  std::size_t s1_checks = 0;
  std::size_t s2_checks = 0;

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

namespace detail {

/// Sense function that reverses the crossing of the lowest-numbered chord
/// with its first crossing partner.
inline int buggy_sense(const GaussDiagram& d, ChordId c, ChordId x) {
  int s = crossing_sense(d, c, x);
  for (const auto& [a, da] : d.chords()) {
    for (const auto& [b, db] : d.chords()) {
      if (interleaves(d, a, b)) return (a == c && b == x) ? -s : s;
    }
  }
  return s;
}

inline LaurentPolynomial fuzz_writhe(const GaussDiagram& d, bool buggy) {
  return buggy ? writhe_polynomial_with(d, buggy_sense) : writhe_polynomial(d);
}

/// Two R2_add moves that set up a Reidemeister III triangle around a chord,
/// followed by the triangle move itself. Empty if no combination produced a site.
template <class Rng>
std::vector<DiagramMoveSite> stage_r3(const GaussDiagram& d, Rng& rng) {
  if (d.empty()) return {};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::vector<std::tuple<Role, bool, Sign>> choices;
  for (auto r : {Role::Over, Role::Under})
    for (bool par : {true, false})
      for (auto s : {Sign::Positive, Sign::Negative}) choices.emplace_back(r, par, s);

  for (int attempt = 0; attempt < 4; ++attempt) {
    auto it = d.chords().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(pick(d.size())));
    ChordId a = it->first;
    bool x_is_tail = pick(2) == 0;
    std::size_t z = pick(d.length() + 1);

    std::vector<std::pair<std::size_t, std::size_t>> combos;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j) combos.emplace_back(i, j);
    std::shuffle(combos.begin(), combos.end(), rng);

    for (auto [i, j] : combos) {
      auto [r1, p1, s1] = choices[i % 8];
      std::size_t x = x_is_tail ? d.tail(a) : d.head(a);
      R2Add first{x + i / 8, z, r1, p1, s1};
      auto d1 = apply_move(d, first);
      ChordId u1 = d.next_id();
      ChordId v1{u1.value + 1};
      auto bu = d1.position(u1, opposite(r1));
      auto bv = d1.position(v1, opposite(r1));
      std::size_t middle = std::max(bu, bv);
      std::size_t y = x_is_tail ? d1.head(a) : d1.tail(a);
      auto [r2, p2, s2] = choices[j % 8];
      R2Add second{middle, y + j / 8, r2, p2, s2};
      auto d2 = apply_move(d1, second);
      auto sites = enumerate_moves(d2, MoveKind::R3);
      if (!sites.empty()) return {first, second, sites[pick(sites.size())]};
    }
  }
  return {};
}

}  // namespace detail

/// Random walk from random_diagram(n, seed) (relabeled by first appearance)
/// through `moves` diagram moves, each followed by a random omega move on a
/// graph started at the initial intersection graph. Checked after every move:
/// the writhe polynomial is unchanged, diagram and graph polynomials agree,
/// S1 leaves the intersection graph intact, S2 meets its shell constraints,
/// and every omega move preserves the graph polynomial.
inline FuzzReport fuzz_invariance(std::size_t n, std::size_t moves, std::uint64_t seed, const FuzzOptions& opt = {}) {
  FuzzReport rep;
  rep.n = n;
  rep.moves = moves;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t k) { return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng); };

  GaussDiagram d = relabel_by_first_appearance(random_diagram(n, seed));
  rep.trace.start = serialize_gauss_code(d);
  rep.trace.seed = seed;
  const LaurentPolynomial w0 = writhe_polynomial(d);
  IntersectionGraph g = build_intersection_graph(d);
  const std::size_t chord_cap = n + opt.extra_chords;
  const std::size_t vertex_cap = n + opt.extra_vertices;

  auto fail = [&](std::string check, std::string detail) {
    rep.failures.push_back({rep.trace.steps.size() - 1, std::move(check), std::move(detail)});
  };

  auto apply_checked = [&](const DiagramMoveSite& site) {
    rep.trace.steps.emplace_back(site);
    GaussDiagram after;
    try {
      after = apply_move(d, site);
    } catch (const Error& e) {
      fail("apply", e.what());
      return false;
    }
    ++rep.counts[std::string(move_kind_name(kind_of(site)))];
    auto w = detail::fuzz_writhe(after, opt.inject_sense_bug);
    if (w != w0) fail("writhe_invariance", format_poly(w0) + " became " + format_poly(w));
    auto gw = graph_writhe_polynomial(build_intersection_graph(after));
    if (gw != w) fail("diagram_graph_agreement", format_poly(w) + " vs graph " + format_poly(gw));
    if (std::holds_alternative<S1Move>(site)) {
      ++rep.s1_checks;
      auto gb = build_intersection_graph(d);
      auto ga = build_intersection_graph(after);
      bool same = gb == ga;
      if (same && gb.vertex_count() <= kDefaultIsomorphismCap) same = graphs_isomorphic(gb, ga);
      if (!same) fail("s1_graph", "intersection graph changed");
    }
    if (std::holds_alternative<S2Add>(site) || std::holds_alternative<S2Remove>(site)) {
      ++rep.s2_checks;
      if (auto why = check_s2_constraints(d, after, site)) fail("s2_constraints", *why);
    }
    d = std::move(after);
    return true;
  };

  auto omega_step = [&] {
    std::vector<OmegaKind> kinds(kAllOmegaKinds.begin(), kAllOmegaKinds.end());
    std::shuffle(kinds.begin(), kinds.end(), rng);
    for (auto k : kinds) {
      bool grows = k == OmegaKind::Omega1Add || k == OmegaKind::Omega2Add;
      if (grows && g.vertex_count() + 2 > vertex_cap) continue;
      auto site = random_omega_site(g, k, rng);
      if (!site) continue;
      rep.trace.steps.emplace_back(*site);
      try {
        g = apply_omega(g, *site);
      } catch (const Error& e) {
        fail("omega_apply", e.what());
        return;
      }
      ++rep.counts[std::string(omega_kind_name(k))];
      auto gw = graph_writhe_polynomial(g);
      if (gw != w0) fail("omega_invariance", format_poly(w0) + " became " + format_poly(gw));
      return;
    }
  };

  std::size_t done = 0;
  while (done < moves) {
    std::vector<MoveKind> kinds(kAllMoveKinds.begin(), kAllMoveKinds.end());
    std::shuffle(kinds.begin(), kinds.end(), rng);
    std::optional<DiagramMoveSite> chosen;
    std::vector<DiagramMoveSite> staged;
    for (auto k : kinds) {
      if (adds_chords(k) && d.size() + 2 > chord_cap) continue;
      chosen = random_move_site(d, k, rng);
      if (chosen) break;
      if (k == MoveKind::R3 && d.size() + 4 <= chord_cap && moves - done >= 3) {
        staged = detail::stage_r3(d, rng);
        if (!staged.empty()) break;
      }
    }
    if (!chosen && staged.empty()) chosen = R1Add{pick(detail::gap_count(d)), Sign::Positive, Role::Over};
    if (chosen) staged = {*chosen};
    for (const auto& site : staged) {
      if (!apply_checked(site)) break;
      ++done;
      if (opt.mirror_omega) omega_step();
    }
    if (!rep.failures.empty() && rep.failures.back().check == "apply") break;
  }
  return rep;
}

inline nlohmann::ordered_json fuzz_report_to_json(const FuzzReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["moves"] = r.moves;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  j["counts"] = r.counts;
  j["s1_checks"] = r.s1_checks;
  j["s2_checks"] = r.s2_checks;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"step", f.step}, {"check", f.check}, {"detail", f.detail}});
  j["trace"] = trace_to_json(r.trace);
  return j;
}

}  // namespace vknot
