#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "vknot/diagram.hpp"
#include "vknot/graph.hpp"
#include "vknot/moves.hpp"
#include "vknot/omega.hpp"

namespace vknot {

using TraceStep = std::variant<DiagramMoveSite, OmegaSite>;

/// A start diagram plus the moves applied to it. Diagram moves act on the
/// diagram; omega moves act on a graph that starts as the diagram's
/// intersection graph.
struct MoveTrace {
  std::string start;
  std::uint64_t seed = 0;
  std::vector<TraceStep> steps;
};

struct ReplayResult {
  GaussDiagram diagram;
  IntersectionGraph graph;
};

/// Diagram moves act on the diagram and ω steps act on the graph, which starts
/// as the intersection graph of the start diagram. The two sides evolve
/// independently, as they do in the fuzz driver.
inline ReplayResult replay(const MoveTrace& trace) {
  ReplayResult r{parse_gauss_code(trace.start), {}};
  r.graph = build_intersection_graph(r.diagram);
  for (const auto& step : trace.steps) {
    if (const auto* m = std::get_if<DiagramMoveSite>(&step))
      r.diagram = apply_move(r.diagram, *m);
    else
      r.graph = apply_omega(r.graph, std::get<OmegaSite>(step));
  }
  return r;
}

inline nlohmann::ordered_json trace_to_json(const MoveTrace& trace) {
  nlohmann::ordered_json j;
  j["start"] = trace.start;
  j["seed"] = trace.seed;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& step : trace.steps) {
    if (const auto* m = std::get_if<DiagramMoveSite>(&step))
      j["steps"].push_back(move_site_to_json(*m));
    else
      j["steps"].push_back(omega_site_to_json(std::get<OmegaSite>(step)));
  }
  return j;
}

inline MoveTrace trace_from_json(const nlohmann::json& j) {
  try {
    MoveTrace t;
    t.start = j.at("start").get<std::string>();
    t.seed = j.value("seed", std::uint64_t{0});
    for (const auto& s : j.at("steps")) {
      auto kind = s.at("kind").get<std::string>();
      if (move_kind_from_name(kind))
        t.steps.emplace_back(move_site_from_json(s));
      else
        t.steps.emplace_back(omega_site_from_json(s));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSite(std::string("malformed trace: ") + e.what());
  }
}

}  // namespace vknot
