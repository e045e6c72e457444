#pragma once

// Local data of third Reidemeister moves, generated from an explicit
// arrangement of three oriented lines rather than transcribed by hand.
//
// Lines 0, 1, 2 have directions (1,0), (1,1), (1,-1), each optionally
// reversed; line 2 sits at offset h, and moving h from +1 to -1 sweeps it
// across the intersection of lines 0 and 1. Every assignment of heights
// (top / middle / bottom) is allowed. Along each line the two crossings form
// a segment of two adjacent endpoints in the Gauss word; the move reverses
// all three segments and keeps roles and signs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/graph.hpp"

namespace vknot::r3 {

/// Chord between strands i < j, numbered (0,1) -> 0, (0,2) -> 1, (1,2) -> 2.
constexpr int pair_index(int i, int j) noexcept {
  if (i > j) std::swap(i, j);
  return i == 0 ? j - 1 : 2;
}

struct SegmentEndpoint {
  int other = 0;  ///< label of the segment holding the chord's other endpoint
  Role role = Role::Over;

  friend auto operator<=>(const SegmentEndpoint&, const SegmentEndpoint&) = default;
};

/// Segment contents in label order plus the sign of each chord by pair_index.
struct SegmentPattern {
  std::array<std::array<SegmentEndpoint, 2>, 3> segments{};
  std::array<Sign, 3> signs{};

  friend auto operator<=>(const SegmentPattern&, const SegmentPattern&) = default;

  [[nodiscard]] SegmentPattern reversed() const {
    SegmentPattern p = *this;
    for (auto& s : p.segments) std::swap(s[0], s[1]);
    return p;
  }

  [[nodiscard]] SegmentPattern relabeled(const std::array<int, 3>& perm) const {
    SegmentPattern p;
    for (int s = 0; s < 3; ++s)
      for (int k = 0; k < 2; ++k) p.segments[perm[s]][k] = {perm[segments[s][k].other], segments[s][k].role};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) p.signs[pair_index(perm[i], perm[j])] = signs[pair_index(i, j)];
    return p;
  }
};

namespace detail {

inline std::vector<SegmentPattern> geometric_patterns() {
  constexpr std::array<std::array<int, 2>, 3> base{{{1, 0}, {1, 1}, {1, -1}}};
  std::vector<SegmentPattern> out;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<std::array<int, 2>, 3> dir{};
    for (int i = 0; i < 3; ++i) {
      int o = (mask >> i) & 1 ? -1 : 1;
      dir[i] = {o * base[i][0], o * base[i][1]};
    }
    std::array<int, 3> height{0, 1, 2};
    do {
      for (int h : {1, -1}) {
        // doubled coordinates of the crossings, indexed by pair_index
        std::array<std::array<int, 2>, 3> at{{{0, 0}, {2 * h, 0}, {h, h}}};
        SegmentPattern p;
        for (int i = 0; i < 3; ++i) {
          std::array<int, 2> others{};
          int k = 0;
          for (int j = 0; j < 3; ++j)
            if (j != i) others[k++] = j;
          auto along = [&](int j) {
            const auto& pt = at[pair_index(i, j)];
            return pt[0] * dir[i][0] + pt[1] * dir[i][1];
          };
          if (along(others[0]) > along(others[1])) std::swap(others[0], others[1]);
          for (int e = 0; e < 2; ++e)
            p.segments[i][e] = {others[e], height[i] > height[others[e]] ? Role::Over : Role::Under};
        }
        for (int i = 0; i < 3; ++i) {
          for (int j = i + 1; j < 3; ++j) {
            int over = height[i] > height[j] ? i : j;
            int under = over == i ? j : i;
            int cross = dir[over][0] * dir[under][1] - dir[over][1] * dir[under][0];
            p.signs[pair_index(i, j)] = cross > 0 ? Sign::Positive : Sign::Negative;
          }
        }
        out.push_back(p);
      }
    } while (std::next_permutation(height.begin(), height.end()));
  }
  return out;
}

}  // namespace detail

/// Every local configuration at which a third Reidemeister move applies,
/// closed under relabeling of the three segments.
inline const std::set<SegmentPattern>& patterns() {
  static const std::set<SegmentPattern> table = [] {
    std::set<SegmentPattern> s;
    for (const auto& p : detail::geometric_patterns()) {
      std::array<int, 3> perm{0, 1, 2};
      do {
        s.insert(p.relabeled(perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return s;
  }();
  return table;
}

/// Gauss diagram whose word is segment 0, then 1, then 2; chord pair_index(i,j)
/// gets id pair_index(i,j) + 1.
inline GaussDiagram pattern_diagram(const SegmentPattern& p) {
  std::vector<Endpoint> word;
  for (int s = 0; s < 3; ++s)
    for (const auto& e : p.segments[s]) word.push_back({ChordId{pair_index(s, e.other) + 1}, e.role});
  std::map<ChordId, Sign> signs;
  for (int k = 0; k < 3; ++k) signs.emplace(ChordId{k + 1}, p.signs[k]);
  return GaussDiagram::from_word(std::move(word), signs);
}

/// Signs and induced edges on three local vertices 0, 1, 2. Edge a -> b is
/// bit 3a + b of `edges`.
struct TriangleState {
  std::array<Sign, 3> signs{};
  std::uint16_t edges = 0;

  friend auto operator<=>(const TriangleState&, const TriangleState&) = default;

  [[nodiscard]] bool has(int a, int b) const noexcept { return (edges >> (3 * a + b)) & 1U; }
  [[nodiscard]] bool same_sign() const noexcept { return signs[0] == signs[1] && signs[1] == signs[2]; }

  [[nodiscard]] TriangleState relabeled(const std::array<int, 3>& perm) const {
    TriangleState t;
    for (int i = 0; i < 3; ++i) t.signs[perm[i]] = signs[i];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (has(a, b)) t.edges |= static_cast<std::uint16_t>(1U << (3 * perm[a] + perm[b]));
    return t;
  }
};

inline TriangleState triangle_of(const IntersectionGraph& g) {
  TriangleState t;
  for (int k = 0; k < 3; ++k) t.signs[k] = g.sign(VertexId{k + 1});
  for (const auto& [key, m] : g.edges())
    t.edges |= static_cast<std::uint16_t>(1U << (3 * (key.first.value - 1) + (key.second.value - 1)));
  return t;
}

/// Graph shadows of third Reidemeister moves, split by whether the three
/// vertices share a sign. Keys are before-states; values list the after-states
/// (an empty triangle with mixed signs has two possible completions).
struct TriangleTables {
  std::map<TriangleState, std::vector<std::uint16_t>> same_sign;
  std::map<TriangleState, std::vector<std::uint16_t>> mixed_sign;
};

inline const TriangleTables& triangle_tables() {
  static const TriangleTables tables = [] {
    std::map<TriangleState, std::set<std::uint16_t>> all;
    for (const auto& p : patterns()) {
      auto before = triangle_of(build_intersection_graph(pattern_diagram(p)));
      auto after = triangle_of(build_intersection_graph(pattern_diagram(p.reversed())));
      std::array<int, 3> perm{0, 1, 2};
      do {
        all[before.relabeled(perm)].insert(after.relabeled(perm).edges);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    TriangleTables t;
    for (const auto& [state, afters] : all) {
      auto& dst = state.same_sign() ? t.same_sign : t.mixed_sign;
      dst.emplace(state, std::vector<std::uint16_t>(afters.begin(), afters.end()));
    }
    return t;
  }();
  return tables;
}

}  // namespace vknot::r3
