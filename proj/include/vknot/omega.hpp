#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "vknot/graph.hpp"
#include "vknot/reidemeister3.hpp"

namespace vknot {

enum class OmegaKind {
  Omega0Add,
  Omega0Remove,
  Omega1Add,
  Omega1Remove,
  Omega2Add,
  Omega2Remove,
  Omega3,
  Omega3Prime,
};

inline constexpr std::array<OmegaKind, 8> kAllOmegaKinds{
    OmegaKind::Omega0Add, OmegaKind::Omega0Remove, OmegaKind::Omega1Add, OmegaKind::Omega1Remove,
    OmegaKind::Omega2Add, OmegaKind::Omega2Remove, OmegaKind::Omega3,    OmegaKind::Omega3Prime,
};

inline constexpr std::string_view omega_kind_name(OmegaKind k) {
  switch (k) {
    case OmegaKind::Omega0Add: return "omega0_add";
    case OmegaKind::Omega0Remove: return "omega0_remove";
    case OmegaKind::Omega1Add: return "omega1_add";
    case OmegaKind::Omega1Remove: return "omega1_remove";
    case OmegaKind::Omega2Add: return "omega2_add";
    case OmegaKind::Omega2Remove: return "omega2_remove";
    case OmegaKind::Omega3: return "omega3";
    case OmegaKind::Omega3Prime: return "omega3_prime";
  }
  return "?";
}

inline std::optional<OmegaKind> omega_kind_from_name(std::string_view s) {
  for (auto k : kAllOmegaKinds)
    if (omega_kind_name(k) == s) return k;
  return std::nullopt;
}

/// Into: the edge runs from the listed vertex to the new vertex.
enum class Direction { Into, OutOf };

struct Incidence {
  VertexId vertex;
  Direction dir = Direction::Into;

  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// Bigon: an antiparallel pair of edges between a and b.
struct Omega0Add {
  VertexId a, b;
  friend bool operator==(const Omega0Add&, const Omega0Add&) = default;
};
struct Omega0Remove {
  VertexId a, b;
  friend bool operator==(const Omega0Remove&, const Omega0Remove&) = default;
};
struct Omega1Add {
  Sign sign = Sign::Positive;
  friend bool operator==(const Omega1Add&, const Omega1Add&) = default;
};
struct Omega1Remove {
  VertexId v;
  friend bool operator==(const Omega1Remove&, const Omega1Remove&) = default;
};
/// Two new vertices, the first with `sign` and the second with its opposite,
/// each attached to the same multiset of existing vertices.
struct Omega2Add {
  Sign sign = Sign::Positive;
  std::vector<Incidence> neighbors;
  friend bool operator==(const Omega2Add&, const Omega2Add&) = default;
};
struct Omega2Remove {
  VertexId a, b;
  friend bool operator==(const Omega2Remove&, const Omega2Remove&) = default;
};
/// Replaces the edges induced on `triple` by `target`.
struct TriangleRewrite {
  std::array<VertexId, 3> triple{};
  std::vector<IntersectionGraph::EdgeKey> target;
  friend bool operator==(const TriangleRewrite&, const TriangleRewrite&) = default;
};
struct Omega3 : TriangleRewrite {};
struct Omega3Prime : TriangleRewrite {};

using OmegaSite = std::variant<Omega0Add, Omega0Remove, Omega1Add, Omega1Remove, Omega2Add, Omega2Remove, Omega3,
                               Omega3Prime>;

inline OmegaKind kind_of(const OmegaSite& s) { return static_cast<OmegaKind>(s.index()); }

namespace detail {

using NeighborMultiset = std::map<Incidence, int>;

inline NeighborMultiset neighbor_multiset(const IntersectionGraph& g, VertexId v) {
  NeighborMultiset n;
  for (const auto& [key, m] : g.edges()) {
    if (key.second == v) n[{key.first, Direction::Into}] += m;
    if (key.first == v) n[{key.second, Direction::OutOf}] += m;
  }
  return n;
}

inline bool is_isolated(const IntersectionGraph& g, VertexId v) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [v](const auto& kv) { return kv.first.first == v || kv.first.second == v; });
}

inline bool pair_removable(const IntersectionGraph& g, VertexId a, VertexId b) {
  if (a == b || !g.contains(a) || !g.contains(b)) return false;
  if (g.sign(a) == g.sign(b) || g.adjacent(a, b)) return false;
  return neighbor_multiset(g, a) == neighbor_multiset(g, b);
}

/// Induced state on an ordered triple; nullopt when some pair carries more
/// than one edge.
inline std::optional<r3::TriangleState> triangle_state(const IntersectionGraph& g,
                                                       const std::array<VertexId, 3>& t) {
  r3::TriangleState s;
  for (int k = 0; k < 3; ++k) s.signs[k] = g.sign(t[k]);
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      int ab = g.multiplicity(t[a], t[b]);
      int ba = g.multiplicity(t[b], t[a]);
      if (ab + ba > 1) return std::nullopt;
      if (ab) s.edges |= static_cast<std::uint16_t>(1U << (3 * a + b));
      if (ba) s.edges |= static_cast<std::uint16_t>(1U << (3 * b + a));
    }
  }
  return s;
}

inline std::vector<IntersectionGraph::EdgeKey> edges_of_mask(const std::array<VertexId, 3>& t, std::uint16_t mask) {
  std::vector<IntersectionGraph::EdgeKey> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if ((mask >> (3 * a + b)) & 1U) out.emplace_back(t[a], t[b]);
  return out;
}

inline std::optional<std::uint16_t> mask_of_edges(const std::array<VertexId, 3>& t,
                                                  const std::vector<IntersectionGraph::EdgeKey>& edges) {
  std::uint16_t mask = 0;
  for (const auto& [from, to] : edges) {
    auto a = std::find(t.begin(), t.end(), from) - t.begin();
    auto b = std::find(t.begin(), t.end(), to) - t.begin();
    if (a == 3 || b == 3 || a == b) return std::nullopt;
    auto bit = static_cast<std::uint16_t>(1U << (3 * a + b));
    if (mask & bit) return std::nullopt;
    mask |= bit;
  }
  return mask;
}

inline const std::map<r3::TriangleState, std::vector<std::uint16_t>>& triangle_table(OmegaKind k) {
  return k == OmegaKind::Omega3 ? r3::triangle_tables().same_sign : r3::triangle_tables().mixed_sign;
}

inline bool triangle_valid(const IntersectionGraph& g, const TriangleRewrite& t, OmegaKind kind) {
  const auto& [a, b, c] = t.triple;
  if (a == b || b == c || a == c) return false;
  if (!g.contains(a) || !g.contains(b) || !g.contains(c)) return false;
  auto state = triangle_state(g, t.triple);
  auto mask = mask_of_edges(t.triple, t.target);
  if (!state || !mask) return false;
  const auto& table = triangle_table(kind);
  auto it = table.find(*state);
  return it != table.end() && std::find(it->second.begin(), it->second.end(), *mask) != it->second.end();
}

inline void enumerate_triangles(const IntersectionGraph& g, OmegaKind kind, std::vector<OmegaSite>& out) {
  std::vector<VertexId> vs;
  for (const auto& [v, s] : g.vertices()) vs.push_back(v);
  const auto& table = triangle_table(kind);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        std::array<VertexId, 3> t{vs[i], vs[j], vs[k]};
        auto state = triangle_state(g, t);
        if (!state) continue;
        auto it = table.find(*state);
        if (it == table.end()) continue;
        for (auto mask : it->second) {
          TriangleRewrite rw{t, edges_of_mask(t, mask)};
          if (kind == OmegaKind::Omega3)
            out.emplace_back(Omega3{rw});
          else
            out.emplace_back(Omega3Prime{rw});
        }
      }
    }
  }
}

}  // namespace detail

/// All sites of `kind`. Removal and triangle kinds are listed exhaustively.
/// For adding kinds the free parameters are unbounded, so the list holds the
/// canonical representatives: both signs for omega1_add, every vertex pair for
/// omega0_add, and for omega2_add both signs with the empty neighbor multiset
/// or a single incidence.
inline std::vector<OmegaSite> enumerate_omega_sites(const IntersectionGraph& g, OmegaKind kind) {
  std::vector<OmegaSite> out;
  std::vector<VertexId> vs;
  for (const auto& [v, s] : g.vertices()) vs.push_back(v);
  switch (kind) {
    case OmegaKind::Omega0Add:
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) out.emplace_back(Omega0Add{vs[i], vs[j]});
      break;
    case OmegaKind::Omega0Remove:
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (g.multiplicity(vs[i], vs[j]) > 0 && g.multiplicity(vs[j], vs[i]) > 0)
            out.emplace_back(Omega0Remove{vs[i], vs[j]});
      break;
    case OmegaKind::Omega1Add:
      out.emplace_back(Omega1Add{Sign::Positive});
      out.emplace_back(Omega1Add{Sign::Negative});
      break;
    case OmegaKind::Omega1Remove:
      for (auto v : vs)
        if (detail::is_isolated(g, v)) out.emplace_back(Omega1Remove{v});
      break;
    case OmegaKind::Omega2Add:
      for (auto s : {Sign::Positive, Sign::Negative}) {
        out.emplace_back(Omega2Add{s, {}});
        for (auto v : vs)
          for (auto dir : {Direction::Into, Direction::OutOf}) out.emplace_back(Omega2Add{s, {{v, dir}}});
      }
      break;
    case OmegaKind::Omega2Remove: {
      std::map<VertexId, detail::NeighborMultiset> nbrs;
      for (auto v : vs) nbrs.emplace(v, detail::neighbor_multiset(g, v));
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (g.sign(vs[i]) != g.sign(vs[j]) && !g.adjacent(vs[i], vs[j]) && nbrs[vs[i]] == nbrs[vs[j]])
            out.emplace_back(Omega2Remove{vs[i], vs[j]});
      break;
    }
    case OmegaKind::Omega3:
    case OmegaKind::Omega3Prime:
      detail::enumerate_triangles(g, kind, out);
      break;
  }
  return out;
}

/// Applies a site after re-validating it against `g`. New vertices receive
/// fresh ids in order: the omega1 vertex, or the omega2 pair (signed vertex first).
inline IntersectionGraph apply_omega(const IntersectionGraph& g, const OmegaSite& site) {
  IntersectionGraph out = g;
  auto invalid = [&](const std::string& why) {
    return InvalidSite(std::string(omega_kind_name(kind_of(site))) + ": " + why);
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Omega0Add>) {
          if (s.a == s.b || !g.contains(s.a) || !g.contains(s.b)) throw invalid("needs two distinct vertices");
          out.add_edge(s.a, s.b);
          out.add_edge(s.b, s.a);
        } else if constexpr (std::is_same_v<T, Omega0Remove>) {
          if (g.multiplicity(s.a, s.b) == 0 || g.multiplicity(s.b, s.a) == 0) throw invalid("no antiparallel pair");
          out.remove_edge(s.a, s.b);
          out.remove_edge(s.b, s.a);
        } else if constexpr (std::is_same_v<T, Omega1Add>) {
          out.add_vertex(s.sign);
        } else if constexpr (std::is_same_v<T, Omega1Remove>) {
          if (!g.contains(s.v) || !detail::is_isolated(g, s.v)) throw invalid("vertex is not isolated");
          out.remove_vertex(s.v);
        } else if constexpr (std::is_same_v<T, Omega2Add>) {
          for (const auto& inc : s.neighbors)
            if (!g.contains(inc.vertex)) throw invalid("unknown neighbor " + std::to_string(inc.vertex.value));
          auto p = out.add_vertex(s.sign);
          auto q = out.add_vertex(-s.sign);
          for (const auto& inc : s.neighbors) {
            for (auto v : {p, q}) {
              if (inc.dir == Direction::Into)
                out.add_edge(inc.vertex, v);
              else
                out.add_edge(v, inc.vertex);
            }
          }
        } else if constexpr (std::is_same_v<T, Omega2Remove>) {
          if (!detail::pair_removable(g, s.a, s.b)) throw invalid("not a removable opposite-sign pair");
          out.remove_vertex(s.a);
          out.remove_vertex(s.b);
        } else {
          constexpr auto kind = std::is_same_v<T, Omega3> ? OmegaKind::Omega3 : OmegaKind::Omega3Prime;
          if (!detail::triangle_valid(g, s, kind)) throw invalid("triangle pattern not present");
          for (auto a : s.triple)
            for (auto b : s.triple)
              if (a != b && g.multiplicity(a, b) > 0) out.remove_edge(a, b);
          for (const auto& [from, to] : s.target) out.add_edge(from, to);
        }
      },
      site);
  return out;
}

/// A uniformly chosen site of `kind`, or nullopt if none applies. Adding
/// kinds draw their free parameters directly; omega2_add picks up to three
/// random incidences.
template <class Rng>
std::optional<OmegaSite> random_omega_site(const IntersectionGraph& g, OmegaKind kind, Rng& rng) {
  std::vector<VertexId> vs;
  for (const auto& [v, s] : g.vertices()) vs.push_back(v);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto coin = [&] { return pick(2) == 0; };
  switch (kind) {
    case OmegaKind::Omega0Add: {
      if (vs.size() < 2) return std::nullopt;
      auto i = pick(vs.size());
      auto j = pick(vs.size() - 1);
      if (j >= i) ++j;
      return Omega0Add{vs[i], vs[j]};
    }
    case OmegaKind::Omega1Add:
      return Omega1Add{coin() ? Sign::Positive : Sign::Negative};
    case OmegaKind::Omega2Add: {
      Omega2Add s{coin() ? Sign::Positive : Sign::Negative, {}};
      if (!vs.empty()) {
        auto k = pick(4);
        for (std::size_t n = 0; n < k; ++n)
          s.neighbors.push_back({vs[pick(vs.size())], coin() ? Direction::Into : Direction::OutOf});
      }
      return s;
    }
    default: {
      auto sites = enumerate_omega_sites(g, kind);
      if (sites.empty()) return std::nullopt;
      return sites[pick(sites.size())];
    }
  }
}

/// The three-step replacement of an omega3' rewrite: add an opposite-sign
/// pair that already carries the odd vertex's rewritten neighborhood, run an
/// omega3 on the same-sign triangle formed with the pair's second vertex, then
/// remove that vertex together with the original odd vertex. The surviving new
/// vertex takes over the odd vertex's role.
inline std::array<OmegaSite, 3> omega3_prime_via_omega3(const IntersectionGraph& g, const Omega3Prime& site) {
  if (!detail::triangle_valid(g, site, OmegaKind::Omega3Prime)) throw InvalidSite("omega3_prime: pattern not present");
  const auto& t = site.triple;
  int odd = 0;
  for (int k = 0; k < 3; ++k)
    if (g.sign(t[k]) != g.sign(t[(k + 1) % 3]) && g.sign(t[k]) != g.sign(t[(k + 2) % 3])) odd = k;
  VertexId x = t[odd];
  VertexId y = t[(odd + 1) % 3];
  VertexId z = t[(odd + 2) % 3];

  Omega2Add add{g.sign(x), {}};
  for (const auto& [key, m] : g.edges()) {
    for (int k = 0; k < m; ++k) {
      if (key.first == x && key.second != y && key.second != z) add.neighbors.push_back({key.second, Direction::OutOf});
      if (key.second == x && key.first != y && key.first != z) add.neighbors.push_back({key.first, Direction::Into});
    }
  }
  for (const auto& [from, to] : site.target) {
    if (from == x) add.neighbors.push_back({to, Direction::OutOf});
    if (to == x) add.neighbors.push_back({from, Direction::Into});
  }

  VertexId q{g.next_id() + 1};  // second vertex of the pair
  Omega3 tri;
  tri.triple = {q, y, z};
  for (const auto& [from, to] : site.target)
    if (from != x && to != x) tri.target.emplace_back(from, to);
  for (auto other : {y, z}) {
    if (g.multiplicity(x, other) > 0) tri.target.emplace_back(q, other);
    if (g.multiplicity(other, x) > 0) tri.target.emplace_back(other, q);
  }
  return {OmegaSite{add}, OmegaSite{tri}, OmegaSite{Omega2Remove{x, q}}};
}

inline nlohmann::ordered_json omega_site_to_json(const OmegaSite& site) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(omega_kind_name(kind_of(site)));
  auto edge_list = [](const std::vector<IntersectionGraph::EdgeKey>& es) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [a, b] : es) arr.push_back({a.value, b.value});
    return arr;
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Omega0Add> || std::is_same_v<T, Omega0Remove> ||
                      std::is_same_v<T, Omega2Remove>) {
          j["a"] = s.a.value;
          j["b"] = s.b.value;
        } else if constexpr (std::is_same_v<T, Omega1Add>) {
          j["sign"] = value(s.sign);
        } else if constexpr (std::is_same_v<T, Omega1Remove>) {
          j["vertex"] = s.v.value;
        } else if constexpr (std::is_same_v<T, Omega2Add>) {
          j["sign"] = value(s.sign);
          j["neighbors"] = nlohmann::ordered_json::array();
          for (const auto& inc : s.neighbors)
            j["neighbors"].push_back({{"vertex", inc.vertex.value}, {"dir", inc.dir == Direction::Into ? "in" : "out"}});
        } else {
          j["triple"] = {s.triple[0].value, s.triple[1].value, s.triple[2].value};
          j["target"] = edge_list(s.target);
        }
      },
      site);
  return j;
}

inline OmegaSite omega_site_from_json(const nlohmann::json& j) {
  try {
    auto kind = omega_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw InvalidSite("unknown omega kind " + j.at("kind").dump());
    auto vid = [&](const char* key) { return VertexId{j.at(key).get<std::int64_t>()}; };
    auto sign = [&] { return j.at("sign").get<int>() < 0 ? Sign::Negative : Sign::Positive; };
    auto triangle = [&] {
      TriangleRewrite t;
      const auto& tr = j.at("triple");
      for (int k = 0; k < 3; ++k) t.triple[k] = VertexId{tr.at(k).get<std::int64_t>()};
      for (const auto& e : j.at("target"))
        t.target.emplace_back(VertexId{e.at(0).get<std::int64_t>()}, VertexId{e.at(1).get<std::int64_t>()});
      return t;
    };
    switch (*kind) {
      case OmegaKind::Omega0Add: return Omega0Add{vid("a"), vid("b")};
      case OmegaKind::Omega0Remove: return Omega0Remove{vid("a"), vid("b")};
      case OmegaKind::Omega1Add: return Omega1Add{sign()};
      case OmegaKind::Omega1Remove: return Omega1Remove{vid("vertex")};
      case OmegaKind::Omega2Add: {
        Omega2Add s{sign(), {}};
        for (const auto& n : j.at("neighbors"))
          s.neighbors.push_back({VertexId{n.at("vertex").get<std::int64_t>()},
                                 n.at("dir").get<std::string>() == "in" ? Direction::Into : Direction::OutOf});
        return s;
      }
      case OmegaKind::Omega2Remove: return Omega2Remove{vid("a"), vid("b")};
      case OmegaKind::Omega3: return Omega3{triangle()};
      case OmegaKind::Omega3Prime: return Omega3Prime{triangle()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSite(std::string("malformed omega site: ") + e.what());
  }
  throw InvalidSite("unreachable");
}

}  // namespace vknot
