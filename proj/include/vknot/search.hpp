#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>

#include "vknot/diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/trace.hpp"

namespace vknot {

struct SearchOptions {
  std::size_t max_depth = 6;        ///< requests deeper than this throw SizeLimit
  std::size_t max_input_chords = 6;  ///< larger inputs throw SizeLimit
  std::size_t max_chords = 8;        ///< intermediate diagrams never exceed this
  std::size_t max_nodes = 200000;    ///< distinct diagrams visited before giving up
};

struct SearchOutcome {
  std::optional<MoveTrace> trace;
  std::size_t visited = 0;
  bool exhausted_budget = false;    ///< stopped at max_nodes, not at the depth bound
  bool invariant_mismatch = false;  ///< writhe polynomials differ; nothing searched
};

/// Breadth-first search from d1 over every diagram move kind, matching on
/// canonical_form. The trace starts at the serialized form of d1.
inline SearchOutcome bounded_equivalence_search_detailed(const GaussDiagram& d1, const GaussDiagram& d2,
                                                         std::size_t depth, const SearchOptions& opt = {}) {
  if (depth > opt.max_depth)
    throw SizeLimit("search depth " + std::to_string(depth) + " exceeds cap " + std::to_string(opt.max_depth));
  if (d1.size() > opt.max_input_chords || d2.size() > opt.max_input_chords)
    throw SizeLimit("search inputs are limited to " + std::to_string(opt.max_input_chords) + " chords");

  SearchOutcome out;
  if (writhe_polynomial(d1) != writhe_polynomial(d2)) {
    out.invariant_mismatch = true;
    return out;
  }

  const std::string start_code = serialize_gauss_code(d1);
  const std::string goal = canonical_form(d2);

  struct Node {
    GaussDiagram diagram;
    std::size_t parent;
    std::optional<DiagramMoveSite> via;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;

  auto finish = [&](std::size_t i) {
    MoveTrace t{start_code, 0, {}};
    std::vector<DiagramMoveSite> path;
    for (; nodes[i].via; i = nodes[i].parent) path.push_back(*nodes[i].via);
    for (auto it = path.rbegin(); it != path.rend(); ++it) t.steps.emplace_back(*it);
    out.trace = std::move(t);
    out.visited = nodes.size();
    return out;
  };

  auto d0 = parse_gauss_code(start_code);
  auto key0 = canonical_form(d0);
  nodes.push_back({d0, 0, std::nullopt, 0});
  seen.emplace(key0, 0);
  if (key0 == goal) return finish(0);
  queue.push_back(0);

  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    if (nodes[i].depth == depth) continue;
    for (auto kind : kAllMoveKinds) {
      std::size_t growth = kind == MoveKind::R1Add ? 1 : adds_chords(kind) ? 2 : 0;
      if (nodes[i].diagram.size() + growth > opt.max_chords) continue;
      for (const auto& site : enumerate_moves(nodes[i].diagram, kind)) {
        auto next = apply_move(nodes[i].diagram, site);
        auto key = canonical_form(next);
        if (seen.contains(key)) continue;
        if (nodes.size() >= opt.max_nodes) {
          out.exhausted_budget = true;
          out.visited = nodes.size();
          return out;
        }
        seen.emplace(key, nodes.size());
        nodes.push_back({std::move(next), i, site, nodes[i].depth + 1});
        if (key == goal) return finish(nodes.size() - 1);
        queue.push_back(nodes.size() - 1);
      }
    }
  }
  out.visited = nodes.size();
  return out;
}

/// A move trace from d1 to a diagram equal to d2 up to rotation and chord
/// renaming, using at most `depth` moves; nullopt if none was found.
inline std::optional<MoveTrace> bounded_equivalence_search(const GaussDiagram& d1, const GaussDiagram& d2,
                                                           std::size_t depth, const SearchOptions& opt = {}) {
  return bounded_equivalence_search_detailed(d1, d2, depth, opt).trace;
}

}  // namespace vknot
