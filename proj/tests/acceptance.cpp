// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "vknot/vknot.hpp"

using namespace vknot;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

Result trefoil_value() {
  auto d = parse_gauss_code("O1+ O2+ U1+ U2+");
  auto w = writhe_polynomial(d);
  std::map<std::int64_t, std::int64_t> by_hand{{1, 1}, {-1, 1}, {0, -2}};
  bool ok = oracle::terms(w) == by_hand && oracle::writhe_poly(d) == by_hand && format_poly(w) == "t + t^-1 - 2";
  return {ok, "W = " + format_poly(w)};
}

std::vector<GaussDiagram> corpus() {
  std::vector<GaussDiagram> out;
  for (std::uint64_t i = 0; i < 1000; ++i) out.push_back(random_diagram(i % 13, 0xC0FFEE + i));
  return out;
}

Result diagram_graph_agreement(const std::vector<GaussDiagram>& ds) {
  std::size_t bad = 0;
  for (const auto& d : ds) {
    auto g = build_intersection_graph(d);
    auto w = writhe_polynomial(d);
    if (w != graph_writhe_polynomial(g) || oracle::terms(w) != oracle::graph_writhe_poly(g) ||
        oracle::terms(w) != oracle::writhe_poly(d))
      ++bad;
  }
  return {bad == 0, std::to_string(ds.size()) + " diagrams, " + std::to_string(bad) + " mismatches"};
}

Result necessity(const std::vector<GaussDiagram>& ds) {
  std::size_t bad = 0;
  for (const auto& d : ds) {
    auto w = writhe_polynomial(d);
    if (w.eval_at_one() != 0 || w.derivative_at_one() != 0) ++bad;
  }
  return {bad == 0, std::to_string(ds.size()) + " diagrams, " + std::to_string(bad) + " violations"};
}

struct FuzzCorpus {
  std::vector<FuzzReport> reports;
  std::map<std::string, std::size_t> counts;
  std::size_t s1 = 0, s2 = 0;
};

FuzzCorpus run_fuzz() {
  FuzzCorpus c;
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto r = fuzz_invariance(i % 9, 50, 1000 + i);
    for (const auto& [k, v] : r.counts) c.counts[k] += v;
    c.s1 += r.s1_checks;
    c.s2 += r.s2_checks;
    c.reports.push_back(std::move(r));
  }
  return c;
}

Result move_invariance(const FuzzCorpus& c) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& r : c.reports) {
    for (const auto& f : r.failures) {
      if (f.check == "s2_constraints") continue;
      if (first.empty()) first = " first: seed " + std::to_string(r.seed) + " " + f.check + " " + f.detail;
      ++bad;
    }
  }
  bool mixed = true;
  std::string counts;
  for (auto k : {"R1_add", "R1_remove", "R2_add", "R2_remove", "R3", "S1", "S2_add", "S2_remove"}) {
    auto it = c.counts.find(k);
    std::size_t n = it == c.counts.end() ? 0 : it->second;
    mixed = mixed && n > 0;
    counts += std::string(counts.empty() ? "" : " ") + k + "=" + std::to_string(n);
  }
  std::size_t omega = 0;
  for (auto k : kAllOmegaKinds) {
    auto it = c.counts.find(std::string(omega_kind_name(k)));
    omega += it == c.counts.end() ? 0 : it->second;
  }
  return {bad == 0 && mixed && c.s1 > 0,
          "500 runs, " + std::to_string(bad) + " failures, " + counts + ", omega=" + std::to_string(omega) +
              ", S1 graph checks=" + std::to_string(c.s1) + first};
}

Result s2_constraints(const FuzzCorpus& c) {
  std::size_t bad = 0;
  for (const auto& r : c.reports)
    for (const auto& f : r.failures) bad += f.check == "s2_constraints";
  return {bad == 0 && c.s2 > 0, std::to_string(c.s2) + " S2 moves checked, " + std::to_string(bad) + " violations"};
}

Result theorem_consistency() {
  std::mt19937_64 rng(2024);
  std::size_t bad = 0, equal_pairs = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto d1 = random_diagram(1 + i % 7, 500 + i);
    GaussDiagram d2;
    switch (i % 4) {
      case 0: d2 = random_diagram(1 + i % 7, 9000 + i); break;
      case 1: d2 = realize(writhe_polynomial(d1)); break;
      case 2: d2 = replay(fuzz_invariance(0, 0, 0).trace).diagram; break;
      default: {
        auto r = fuzz_invariance(1 + i % 7, 10, 500 + i);
        d1 = parse_gauss_code(r.trace.start);
        d2 = replay(r.trace).diagram;
      }
    }
    auto g1 = build_intersection_graph(d1);
    auto g2 = build_intersection_graph(d2);
    const bool same = oracle::writhe_poly(d1) == oracle::writhe_poly(d2);
    equal_pairs += same;
    if (graphs_equivalent(g1, g2) != same) ++bad;
    for (int step = 0; step < 20; ++step) {
      auto& g = step % 2 ? g1 : g2;
      auto k = kAllOmegaKinds[rng() % kAllOmegaKinds.size()];
      if (auto site = random_omega_site(g, k, rng)) g = apply_omega(g, *site);
      if (graphs_equivalent(g1, g2) != same) {
        ++bad;
        break;
      }
    }
  }
  return {bad == 0, "200 pairs (" + std::to_string(equal_pairs) + " with equal W), " + std::to_string(bad) +
                        " inconsistent, 20 omega moves each"};
}

Result realization() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int64_t> kd(2, 10), cd(-5, 5), terms(1, 6), ed(-10, 10);
  std::size_t bad = 0, rejected = 0;
  std::vector<LaurentPolynomial> fs;
  for (int i = 0; i < 500; ++i) {
    LaurentPolynomial f;
    for (auto n = terms(rng); n > 0; --n) {
      auto which = rng() % 3;
      GeneratorSpec s = which == 0 ? GeneratorSpec{Family::P, kd(rng), 1}
                        : which == 1 ? GeneratorSpec{Family::N, -kd(rng), 1}
                                     : GeneratorSpec{Family::T, 1, 1};
      f += basis(s).scaled(cd(rng));
    }
    fs.push_back(f);
    auto d = realize(f);
    if (oracle::writhe_poly(d) != oracle::terms(f) || format_poly(writhe_polynomial(d)) != format_poly(f)) ++bad;
  }
  for (int i = 0; i < 100; ++i) {
    auto f = fs[static_cast<std::size_t>(i)];
    std::int64_t c = 0;
    while (c == 0) c = cd(rng);
    if (i % 2 == 0) {
      f.add_term(ed(rng), c);
    } else {
      auto a = ed(rng);
      auto b = a;
      while (b == a) b = ed(rng);
      f.add_term(a, c);
      f.add_term(b, -c);
    }
    try {
      (void)realize(f);
    } catch (const NotRealizable&) {
      ++rejected;
    }
  }
  return {bad == 0 && rejected == 100,
          "500 round trips, " + std::to_string(bad) + " mismatches; " + std::to_string(rejected) + "/100 rejected"};
}

Result lemma_composite() {
  std::mt19937_64 rng(31);
  const auto& table = r3::triangle_tables().mixed_sign;
  std::vector<std::pair<r3::TriangleState, std::uint16_t>> moves;
  for (const auto& [state, afters] : table)
    for (auto a : afters) moves.emplace_back(state, a);
  std::size_t bad = 0, brute = 0;
  for (int i = 0; i < 50; ++i) {
    const auto& [state, after] = moves[static_cast<std::size_t>(i) % moves.size()];
    IntersectionGraph g;
    std::array<VertexId, 3> t{};
    for (int k = 0; k < 3; ++k) t[k] = g.add_vertex(state.signs[k]);
    std::vector<VertexId> ext;
    for (auto n = rng() % 4; n > 0; --n) ext.push_back(g.add_vertex(rng() % 2 ? Sign::Positive : Sign::Negative));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (state.has(a, b)) g.add_edge(t[a], t[b]);
    for (auto v : ext)
      for (auto u : t) {
        if (rng() % 3 == 0) g.add_edge(u, v, 1 + static_cast<int>(rng() % 2));
        if (rng() % 3 == 0) g.add_edge(v, u);
      }
    TriangleRewrite rw{t, {}};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if ((after >> (3 * a + b)) & 1U) rw.target.emplace_back(t[a], t[b]);
    Omega3Prime site{rw};
    auto direct = apply_omega(g, site);
    auto composite = g;
    for (const auto& step : omega3_prime_via_omega3(g, site)) composite = apply_omega(composite, step);
    bool iso = graphs_isomorphic(direct, composite);
    if (direct.vertex_count() <= 6) {
      ++brute;
      iso = iso && oracle::isomorphic(direct, composite);
    }
    if (!iso || graph_writhe_polynomial(direct) != graph_writhe_polynomial(g)) ++bad;
  }
  return {bad == 0, "50 instances (" + std::to_string(brute) + " also by brute force), " + std::to_string(bad) +
                        " mismatches"};
}

Result switch_commutation() {
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto d = random_diagram(1 + i % 10, 4242 + i);
    ChordId c{1 + static_cast<std::int64_t>(i % d.size())};
    auto lhs = build_intersection_graph(crossing_switch(d, c));
    auto rhs = vertex_switch(build_intersection_graph(d), VertexId{c.value});
    bool ok = graphs_isomorphic(lhs, rhs);
    if (lhs.vertex_count() <= 6) ok = ok && oracle::isomorphic(lhs, rhs);
    bad += !ok;
  }
  return {bad == 0, "200 pairs, " + std::to_string(bad) + " mismatches"};
}

Result search_sanity() {
  auto t = parse_gauss_code("O1+ O2+ U1+ U2+");
  auto kink = apply_move(t, R1Add{2, Sign::Negative, Role::Under});
  auto found = bounded_equivalence_search_detailed(t, kink, 1);
  bool ok = found.trace && found.trace->steps.size() == 1 &&
            canonical_form(replay(*found.trace).diagram) == canonical_form(kink);
  auto other = parse_gauss_code("O1+ O2- O3- U1+ U3- U2-");
  auto none = bounded_equivalence_search_detailed(t, other, 6);
  ok = ok && !none.trace && none.invariant_mismatch && none.visited == 0;
  return {ok, std::string("kink ") + (found.trace ? "found" : "missing") + " at depth 1; unequal W " +
                  (none.invariant_mismatch ? "rejected before search" : "searched")};
}

}  // namespace

int main() {
  auto ds = corpus();
  auto fz = run_fuzz();
  std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"trefoil writhe polynomial", trefoil_value},
      {"diagram/graph polynomial agreement", [&] { return diagram_graph_agreement(ds); }},
      {"W(1) = 0 and W'(1) = 0", [&] { return necessity(ds); }},
      {"move invariance under fuzzing", [&] { return move_invariance(fz); }},
      {"S2 shell constraints", [&] { return s2_constraints(fz); }},
      {"graph equivalence matches polynomial equality", theorem_consistency},
      {"realization round trip", realization},
      {"omega3' from omega2, omega3, omega2", lemma_composite},
      {"crossing switch vs vertex switch", switch_commutation},
      {"bounded search sanity", search_sanity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.ok;
    std::printf("criterion %zu: %s  %s (%s)\n", i + 1, r.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                r.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
