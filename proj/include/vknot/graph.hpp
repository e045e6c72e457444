#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vknot/core.hpp"
#include "vknot/diagram.hpp"

namespace vknot {

/// Vertex-signed directed multigraph without loops.
class IntersectionGraph {
 public:
  using EdgeKey = std::pair<VertexId, VertexId>;

  /// Adds a vertex with a fresh id. Ids are never reused after removal.
  VertexId add_vertex(Sign s) {
    VertexId v{next_id_++};
    vertices_.emplace(v, s);
    return v;
  }

  void add_vertex(VertexId v, Sign s) {
    if (vertices_.contains(v)) throw Error("vertex " + std::to_string(v.value) + " already present");
    vertices_.emplace(v, s);
    next_id_ = std::max(next_id_, v.value + 1);
  }

  /// Removes `v` and every incident edge.
  void remove_vertex(VertexId v) {
    require(v);
    vertices_.erase(v);
    std::erase_if(edges_, [v](const auto& kv) { return kv.first.first == v || kv.first.second == v; });
  }

  void add_edge(VertexId from, VertexId to, int count = 1) {
    require(from);
    require(to);
    if (from == to) throw Error("loops are not allowed");
    if (count <= 0) return;
    edges_[{from, to}] += count;
  }

  void remove_edge(VertexId from, VertexId to, int count = 1) {
    auto it = edges_.find({from, to});
    if (it == edges_.end() || it->second < count) throw Error("edge not present");
    it->second -= count;
    if (it->second == 0) edges_.erase(it);
  }

  void set_sign(VertexId v, Sign s) {
    require(v);
    vertices_[v] = s;
  }

  [[nodiscard]] int multiplicity(VertexId from, VertexId to) const {
    auto it = edges_.find({from, to});
    return it == edges_.end() ? 0 : it->second;
  }

  [[nodiscard]] bool adjacent(VertexId a, VertexId b) const { return multiplicity(a, b) + multiplicity(b, a) > 0; }

  [[nodiscard]] bool contains(VertexId v) const { return vertices_.contains(v); }

  [[nodiscard]] Sign sign(VertexId v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw UnknownVertex("unknown vertex " + std::to_string(v.value));
    return it->second;
  }

  [[nodiscard]] const std::map<VertexId, Sign>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::map<EdgeKey, int>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }

  [[nodiscard]] std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& [k, m] : edges_) n += static_cast<std::size_t>(m);
    return n;
  }

  [[nodiscard]] std::int64_t next_id() const noexcept { return next_id_; }

  /// Labeled equality of vertices and edge multisets (ignores the id counter).
  friend bool operator==(const IntersectionGraph& a, const IntersectionGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

  void require(VertexId v) const {
    if (!vertices_.contains(v)) throw UnknownVertex("unknown vertex " + std::to_string(v.value));
  }

 private:
  std::map<VertexId, Sign> vertices_;
  std::map<EdgeKey, int> edges_;
  std::int64_t next_id_ = 1;
};

/// Vertex v_c carries chord c's id and sign; for each crossing pair the edge
/// points into v_c from v_x iff x crosses c left to right.
inline IntersectionGraph build_intersection_graph(const GaussDiagram& d) {
  IntersectionGraph g;
  for (const auto& [id, c] : d.chords()) g.add_vertex(VertexId{id.value}, c.sign);
  const auto& chords = d.chords();
  for (auto i = chords.begin(); i != chords.end(); ++i) {
    for (auto j = std::next(i); j != chords.end(); ++j) {
      if (!interleaves(d, i->first, j->first)) continue;
      VertexId vc{i->first.value};
      VertexId vx{j->first.value};
      if (crossing_sense(d, i->first, j->first) == 1)
        g.add_edge(vx, vc);
      else
        g.add_edge(vc, vx);
    }
  }
  return g;
}

/// Signed in-neighbor sum minus signed out-neighbor sum, with multiplicity.
inline int vertex_index(const IntersectionGraph& g, VertexId v) {
  g.require(v);
  int idx = 0;
  for (const auto& [key, m] : g.edges()) {
    if (key.second == v) idx += m * value(g.sign(key.first));
    if (key.first == v) idx -= m * value(g.sign(key.second));
  }
  return idx;
}

/// All vertex indices in one pass over the edges.
inline std::map<VertexId, int> vertex_indices(const IntersectionGraph& g) {
  std::map<VertexId, int> idx;
  for (const auto& [v, s] : g.vertices()) idx.emplace(v, 0);
  for (const auto& [key, m] : g.edges()) {
    idx[key.second] += m * value(g.sign(key.first));
    idx[key.first] -= m * value(g.sign(key.second));
  }
  return idx;
}

/// Negates the sign of `v` and reverses every edge incident to it.
inline IntersectionGraph vertex_switch(const IntersectionGraph& g, VertexId v) {
  IntersectionGraph out = g;
  out.set_sign(v, -g.sign(v));
  std::vector<std::pair<IntersectionGraph::EdgeKey, int>> incident;
  for (const auto& [key, m] : g.edges())
    if (key.first == v || key.second == v) incident.emplace_back(key, m);
  for (const auto& [key, m] : incident) out.remove_edge(key.first, key.second, m);
  for (const auto& [key, m] : incident) out.add_edge(key.second, key.first, m);
  return out;
}

inline constexpr std::size_t kDefaultIsomorphismCap = 16;

namespace detail {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const IntersectionGraph& a, const IntersectionGraph& b) : a_(a), b_(b) {
    for (const auto& [v, s] : a.vertices()) va_.push_back(v);
    for (const auto& [v, s] : b.vertices()) vb_.push_back(v);
    n_ = va_.size();
    ma_ = matrix(a, va_);
    mb_ = matrix(b, vb_);
    for (std::size_t i = 0; i < n_; ++i) {
      sig_a_.push_back(signature(a, va_, ma_, i));
      sig_b_.push_back(signature(b, vb_, mb_, i));
    }
  }

  bool run() {
    if (va_.size() != vb_.size()) return false;
    auto sa = sig_a_;
    auto sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    // most constrained vertices first: highest degree
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return sig_a_[x][1] + sig_a_[x][2] > sig_a_[y][1] + sig_a_[y][2];
    });
    map_.assign(n_, npos);
    used_.assign(n_, false);
    return extend(0);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  using Matrix = std::vector<std::vector<int>>;
  using Signature = std::array<int, 4>;

  static Matrix matrix(const IntersectionGraph& g, const std::vector<VertexId>& vs) {
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
    Matrix m(vs.size(), std::vector<int>(vs.size(), 0));
    for (const auto& [key, mult] : g.edges()) m[pos[key.first]][pos[key.second]] = mult;
    return m;
  }

  static Signature signature(const IntersectionGraph& g, const std::vector<VertexId>& vs, const Matrix& m,
                             std::size_t i) {
    int in = 0;
    int out = 0;
    int idx = 0;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      out += m[i][j];
      in += m[j][i];
      idx += m[j][i] * value(g.sign(vs[j])) - m[i][j] * value(g.sign(vs[j]));
    }
    return {value(g.sign(vs[i])), in, out, idx};
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    std::size_t x = order_[depth];
    for (std::size_t y = 0; y < n_; ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        std::size_t u = order_[k];
        std::size_t w = map_[u];
        ok = ma_[x][u] == mb_[y][w] && ma_[u][x] == mb_[w][y];
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      map_[x] = npos;
    }
    return false;
  }

  const IntersectionGraph& a_;
  const IntersectionGraph& b_;
  std::vector<VertexId> va_, vb_;
  std::size_t n_ = 0;
  Matrix ma_, mb_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<std::size_t> order_, map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Sign-, direction- and multiplicity-preserving isomorphism test by
/// backtracking with signature pruning. Throws SizeLimit above `cap` vertices.
inline bool graphs_isomorphic(const IntersectionGraph& a, const IntersectionGraph& b,
                              std::size_t cap = kDefaultIsomorphismCap) {
  if (a.vertex_count() > cap || b.vertex_count() > cap)
    throw SizeLimit("isomorphism test limited to " + std::to_string(cap) + " vertices");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return detail::IsomorphismSearch(a, b).run();
}

enum class GraphFormat { Dot, Json };

inline nlohmann::ordered_json graph_to_json(const IntersectionGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::object();
  for (const auto& [v, s] : g.vertices()) j["vertices"][std::to_string(v.value)] = value(s);
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [key, m] : g.edges())
    for (int k = 0; k < m; ++k) j["edges"].push_back({{"from", key.first.value}, {"to", key.second.value}});
  return j;
}

inline IntersectionGraph graph_from_json(const nlohmann::json& j) {
  try {
    IntersectionGraph g;
    for (const auto& [key, val] : j.at("vertices").items()) {
      auto s = val.get<int>();
      if (s != 1 && s != -1) throw Error("vertex sign must be 1 or -1");
      g.add_vertex(VertexId{std::stoll(key)}, sign_of(s));
    }
    for (const auto& e : j.at("edges"))
      g.add_edge(VertexId{e.at("from").get<std::int64_t>()}, VertexId{e.at("to").get<std::int64_t>()});
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed graph JSON: ") + e.what());
  }
}

inline std::string export_graph(const IntersectionGraph& g, GraphFormat format) {
  if (format == GraphFormat::Json) return graph_to_json(g).dump();
  std::ostringstream os;
  os << "digraph intersection {\n";
  for (const auto& [v, s] : g.vertices())
    os << "  v" << v.value << " [label=\"" << v.value << sign_char(s) << "\", sign=" << value(s) << "];\n";
  for (const auto& [key, m] : g.edges())
    for (int k = 0; k < m; ++k) os << "  v" << key.first.value << " -> v" << key.second.value << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace vknot
