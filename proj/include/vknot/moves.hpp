#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "vknot/diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/reidemeister3.hpp"

namespace vknot {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, S1, S2Add, S2Remove };

inline constexpr std::array<MoveKind, 8> kAllMoveKinds{
    MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add,  MoveKind::R2Remove,
    MoveKind::R3,    MoveKind::S1,       MoveKind::S2Add, MoveKind::S2Remove,
};

inline constexpr std::string_view move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "R1_add";
    case MoveKind::R1Remove: return "R1_remove";
    case MoveKind::R2Add: return "R2_add";
    case MoveKind::R2Remove: return "R2_remove";
    case MoveKind::R3: return "R3";
    case MoveKind::S1: return "S1";
    case MoveKind::S2Add: return "S2_add";
    case MoveKind::S2Remove: return "S2_remove";
  }
  return "?";
}

inline std::optional<MoveKind> move_kind_from_name(std::string_view s) {
  for (auto k : kAllMoveKinds)
    if (move_kind_name(k) == s) return k;
  return std::nullopt;
}

inline constexpr bool adds_chords(MoveKind k) {
  return k == MoveKind::R1Add || k == MoveKind::R2Add || k == MoveKind::S2Add;
}

/// A gap g sits just before circle position g; gap == length appends.

/// Kink: a fresh chord whose endpoints become adjacent at `gap`.
struct R1Add {
  std::size_t gap = 0;
  Sign sign = Sign::Positive;
  Role first_role = Role::Over;
  friend bool operator==(const R1Add&, const R1Add&) = default;
};

/// Chord whose endpoints sit at `position` and the next position.
struct R1Remove {
  std::size_t position = 0;
  friend bool operator==(const R1Remove&, const R1Remove&) = default;
};

/// Two fresh chords u (sign) and v (-sign). Segment a = [u v] at gap_a with
/// role_a on both; segment b carries the opposite role, ordered [u v] when the
/// strands run parallel and [v u] otherwise. At equal gaps segment a comes first.
struct R2Add {
  std::size_t gap_a = 0;
  std::size_t gap_b = 0;
  Role role_a = Role::Over;
  bool parallel = true;
  Sign sign = Sign::Positive;
  friend bool operator==(const R2Add&, const R2Add&) = default;
};

/// Two segments of adjacent endpoints holding the same opposite-sign chords.
struct R2Remove {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const R2Remove&, const R2Remove&) = default;
};

/// Three disjoint segments forming a triangle; each segment is reversed.
struct R3Move {
  std::array<std::size_t, 3> starts{};
  friend bool operator==(const R3Move&, const R3Move&) = default;
};

/// A shell chord at `position` and position + 2 around one endpoint of
/// another chord slides to the other endpoint of that chord.
struct S1Move {
  std::size_t position = 0;
  friend bool operator==(const S1Move&, const S1Move&) = default;
};

/// Swaps the endpoints at `position` and the next position and wraps each in a
/// fresh shell, c4 around the one moved forward and c3 around the other.
/// w(c3) = shell_sign, w(c4) = -shell_sign; directions are solved for.
struct S2Add {
  std::size_t position = 0;
  Sign shell_sign = Sign::Positive;
  friend bool operator==(const S2Add&, const S2Add&) = default;
};

/// Inverse of S2Add on the six positions starting at `position`.
struct S2Remove {
  std::size_t position = 0;
  friend bool operator==(const S2Remove&, const S2Remove&) = default;
};

using DiagramMoveSite = std::variant<R1Add, R1Remove, R2Add, R2Remove, R3Move, S1Move, S2Add, S2Remove>;

inline MoveKind kind_of(const DiagramMoveSite& s) { return static_cast<MoveKind>(s.index()); }

/// Chords touched by an S2 move: c1, c2 keep their chords, c3, c4 are the shells.
struct S2Participants {
  ChordId c1, c2, c3, c4;
};

namespace detail {

inline std::size_t wrap(std::size_t p, std::size_t len) { return len == 0 ? 0 : p % len; }

inline std::size_t gap_count(const GaussDiagram& d) { return std::max<std::size_t>(d.length(), 1); }

inline GaussDiagram without_chords(const GaussDiagram& d, const std::set<ChordId>& drop) {
  std::vector<Endpoint> word;
  for (const auto& ep : d.word())
    if (!drop.contains(ep.chord)) word.push_back(ep);
  auto signs = d.signs();
  for (auto c : drop) signs.erase(c);
  return GaussDiagram::from_word(std::move(word), signs);
}

inline std::optional<std::pair<ChordId, ChordId>> r2_pair(const GaussDiagram& d, const R2Remove& s) {
  const auto len = d.length();
  if (len < 4 || s.first >= len || s.second >= len) return std::nullopt;
  std::set<std::size_t> pos{s.first, wrap(s.first + 1, len), s.second, wrap(s.second + 1, len)};
  if (pos.size() != 4) return std::nullopt;
  const auto& a0 = d.at(s.first);
  const auto& a1 = d.at(wrap(s.first + 1, len));
  const auto& b0 = d.at(s.second);
  const auto& b1 = d.at(wrap(s.second + 1, len));
  if (a0.chord == a1.chord || a0.role != a1.role || b0.role != b1.role) return std::nullopt;
  std::set<ChordId> sa{a0.chord, a1.chord};
  std::set<ChordId> sb{b0.chord, b1.chord};
  if (sa != sb || d.sign(a0.chord) == d.sign(a1.chord)) return std::nullopt;
  return std::minmax(a0.chord, a1.chord);
}

/// The local pattern at three segment starts, labeled by ascending start.
inline std::optional<r3::SegmentPattern> r3_pattern(const GaussDiagram& d, std::array<std::size_t, 3> starts) {
  const auto len = d.length();
  if (len < 6) return std::nullopt;
  for (auto s : starts)
    if (s >= len) return std::nullopt;
  std::sort(starts.begin(), starts.end());
  std::set<std::size_t> pos;
  for (auto s : starts) {
    pos.insert(s);
    pos.insert(wrap(s + 1, len));
  }
  if (pos.size() != 6) return std::nullopt;
  auto label_of = [&](std::size_t p) -> int {
    for (int i = 0; i < 3; ++i)
      if (p == starts[i] || p == wrap(starts[i] + 1, len)) return i;
    return -1;
  };
  r3::SegmentPattern pat;
  std::array<bool, 3> sign_set{};
  for (int i = 0; i < 3; ++i) {
    if (d.at(starts[i]).chord == d.at(wrap(starts[i] + 1, len)).chord) return std::nullopt;
    for (int k = 0; k < 2; ++k) {
      auto p = wrap(starts[i] + k, len);
      int other = label_of(d.mate(p));
      if (other < 0 || other == i) return std::nullopt;
      pat.segments[i][k] = {other, d.at(p).role};
      pat.signs[r3::pair_index(i, other)] = d.sign(d.at(p).chord);
      sign_set[r3::pair_index(i, other)] = true;
    }
  }
  if (!sign_set[0] || !sign_set[1] || !sign_set[2]) return std::nullopt;
  if (!r3::patterns().contains(pat)) return std::nullopt;
  return pat;
}

inline bool s1_valid(const GaussDiagram& d, std::size_t p) {
  const auto len = d.length();
  if (len < 4 || p >= len) return false;
  auto s = d.at(p).chord;
  return d.at(wrap(p + 2, len)).chord == s && d.at(wrap(p + 1, len)).chord != s;
}

inline bool s2_block_valid(const GaussDiagram& d, std::size_t p) {
  const auto len = d.length();
  if (len < 6 || p >= len) return false;
  auto at = [&](std::size_t k) { return d.at(wrap(p + k, len)).chord; };
  auto c4 = at(0);
  auto c3 = at(3);
  if (at(2) != c4 || at(5) != c3 || c3 == c4) return false;
  for (auto k : {1, 4})
    if (at(k) == c3 || at(k) == c4) return false;
  return true;
}

inline std::vector<Endpoint> s2_add_word(const GaussDiagram& d, std::size_t p, ChordId c3, ChordId c4, Role o3,
                                         Role o4) {
  const auto len = d.length();
  const auto q = wrap(p + 1, len);
  std::vector<Endpoint> word;
  for (std::size_t i = 0; i < len; ++i) {
    if (i == p) {
      word.insert(word.end(), {{c4, o4}, d.at(q), {c4, opposite(o4)}});
    } else if (i == q) {
      word.insert(word.end(), {{c3, o3}, d.at(p), {c3, opposite(o3)}});
    } else {
      word.push_back(d.at(i));
    }
  }
  return word;
}

inline std::optional<std::string> s2_violation(const GaussDiagram& before, const GaussDiagram& after,
                                               const S2Participants& s, bool shells_in_after) {
  const auto& shells = shells_in_after ? after : before;
  if (shells.sign(s.c3) != -shells.sign(s.c4)) return "w(c3) != -w(c4)";
  if (chord_index(shells, s.c3) != chord_index(shells, s.c4)) return "Ind(c3) != Ind(c4)";
  if (chord_index(before, s.c1) != chord_index(after, s.c1)) return "Ind(c1) changed";
  if (chord_index(before, s.c2) != chord_index(after, s.c2)) return "Ind(c2) changed";
  return std::nullopt;
}

}  // namespace detail

/// Roles of the shells for an S2Add, or nullopt when no direction choice
/// satisfies the shell constraints.
inline std::optional<std::pair<Role, Role>> solve_s2_directions(const GaussDiagram& d, const S2Add& s) {
  const auto len = d.length();
  if (len < 2 || s.position >= len) return std::nullopt;
  ChordId c3 = d.next_id();
  ChordId c4{c3.value + 1};
  S2Participants who{d.at(s.position).chord, d.at(detail::wrap(s.position + 1, len)).chord, c3, c4};
  auto signs = d.signs();
  signs[c3] = s.shell_sign;
  signs[c4] = -s.shell_sign;
  for (auto o3 : {Role::Over, Role::Under}) {
    for (auto o4 : {Role::Over, Role::Under}) {
      auto after = GaussDiagram::from_word(detail::s2_add_word(d, s.position, c3, c4, o3, o4), signs);
      if (!detail::s2_violation(d, after, who, true)) return std::pair{o3, o4};
    }
  }
  return std::nullopt;
}

/// Participants of an S2 site, located in the diagram it is applied to.
inline S2Participants s2_participants(const GaussDiagram& d, const DiagramMoveSite& site) {
  const auto len = d.length();
  if (const auto* a = std::get_if<S2Add>(&site)) {
    if (len < 2 || a->position >= len) throw InvalidSite("S2_add: position out of range");
    ChordId c3 = d.next_id();
    return {d.at(a->position).chord, d.at(detail::wrap(a->position + 1, len)).chord, c3, ChordId{c3.value + 1}};
  }
  if (const auto* r = std::get_if<S2Remove>(&site)) {
    if (!detail::s2_block_valid(d, r->position)) throw InvalidSite("S2_remove: no shell block here");
    auto at = [&](std::size_t k) { return d.at(detail::wrap(r->position + k, len)).chord; };
    return {at(4), at(1), at(3), at(0)};
  }
  throw InvalidSite("not an S2 site");
}

/// Checks the S2 shell constraints across an applied S2 move; returns a
/// description of the first violated one.
inline std::optional<std::string> check_s2_constraints(const GaussDiagram& before, const GaussDiagram& after,
                                                       const DiagramMoveSite& site) {
  auto who = s2_participants(before, site);
  return detail::s2_violation(before, after, who, std::holds_alternative<S2Add>(site));
}

inline GaussDiagram apply_move(const GaussDiagram& d, const DiagramMoveSite& site) {
  const auto len = d.length();
  auto invalid = [&](const std::string& why) {
    return InvalidSite(std::string(move_kind_name(kind_of(site))) + ": " + why);
  };
  return std::visit(
      [&](const auto& s) -> GaussDiagram {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, R1Add>) {
          if (s.gap > len) throw invalid("gap out of range");
          std::vector<Endpoint> word(d.word().begin(), d.word().end());
          ChordId c = d.next_id();
          word.insert(word.begin() + static_cast<std::ptrdiff_t>(s.gap),
                      {{c, s.first_role}, {c, opposite(s.first_role)}});
          auto signs = d.signs();
          signs[c] = s.sign;
          return GaussDiagram::from_word(std::move(word), signs);
        } else if constexpr (std::is_same_v<T, R1Remove>) {
          if (len < 2 || s.position >= len || d.at(s.position).chord != d.at(detail::wrap(s.position + 1, len)).chord)
            throw invalid("endpoints are not adjacent");
          return detail::without_chords(d, {d.at(s.position).chord});
        } else if constexpr (std::is_same_v<T, R2Add>) {
          if (s.gap_a > len || s.gap_b > len) throw invalid("gap out of range");
          ChordId u = d.next_id();
          ChordId v{u.value + 1};
          Role rb = opposite(s.role_a);
          std::vector<Endpoint> seg_a{{u, s.role_a}, {v, s.role_a}};
          std::vector<Endpoint> seg_b = s.parallel ? std::vector<Endpoint>{{u, rb}, {v, rb}}
                                                   : std::vector<Endpoint>{{v, rb}, {u, rb}};
          std::vector<Endpoint> word;
          for (std::size_t i = 0; i <= len; ++i) {
            if (i == s.gap_a) word.insert(word.end(), seg_a.begin(), seg_a.end());
            if (i == s.gap_b) word.insert(word.end(), seg_b.begin(), seg_b.end());
            if (i < len) word.push_back(d.at(i));
          }
          auto signs = d.signs();
          signs[u] = s.sign;
          signs[v] = -s.sign;
          return GaussDiagram::from_word(std::move(word), signs);
        } else if constexpr (std::is_same_v<T, R2Remove>) {
          auto pair = detail::r2_pair(d, s);
          if (!pair) throw invalid("segments do not form a removable bigon");
          return detail::without_chords(d, {pair->first, pair->second});
        } else if constexpr (std::is_same_v<T, R3Move>) {
          if (!detail::r3_pattern(d, s.starts)) throw invalid("no triangle pattern at these segments");
          std::vector<Endpoint> word(d.word().begin(), d.word().end());
          for (auto p : s.starts) std::swap(word[p], word[detail::wrap(p + 1, len)]);
          return GaussDiagram::from_word(std::move(word), d.signs());
        } else if constexpr (std::is_same_v<T, S1Move>) {
          if (!detail::s1_valid(d, s.position)) throw invalid("no shell at this position");
          auto shell = d.at(s.position).chord;
          const auto& middle = d.at(detail::wrap(s.position + 1, len));
          std::vector<Endpoint> reduced;
          for (const auto& ep : d.word())
            if (ep.chord != shell) reduced.push_back(ep);
          auto q = static_cast<std::ptrdiff_t>(
              std::find(reduced.begin(), reduced.end(), Endpoint{middle.chord, opposite(middle.role)}) -
              reduced.begin());
          const int sense = crossing_sense(d, middle.chord, shell);
          for (auto first : {Role::Over, Role::Under}) {
            auto word = reduced;
            word.insert(word.begin() + q + 1, Endpoint{shell, opposite(first)});
            word.insert(word.begin() + q, Endpoint{shell, first});
            auto out = GaussDiagram::from_word(std::move(word), d.signs());
            if (crossing_sense(out, middle.chord, shell) == sense) return out;
          }
          throw invalid("no orientation preserves the crossing");
        } else if constexpr (std::is_same_v<T, S2Add>) {
          auto roles = solve_s2_directions(d, s);
          if (len < 2 || s.position >= len) throw invalid("position out of range");
          if (!roles)
            throw S2ConstraintUnsatisfiable("S2_add: no shell directions satisfy the constraints at position " +
                                            std::to_string(s.position));
          ChordId c3 = d.next_id();
          ChordId c4{c3.value + 1};
          auto signs = d.signs();
          signs[c3] = s.shell_sign;
          signs[c4] = -s.shell_sign;
          return GaussDiagram::from_word(detail::s2_add_word(d, s.position, c3, c4, roles->first, roles->second),
                                         signs);
        } else {
          static_assert(std::is_same_v<T, S2Remove>);
          if (!detail::s2_block_valid(d, s.position)) throw invalid("no shell block at this position");
          auto who = s2_participants(d, site);
          auto pb = detail::wrap(s.position + 1, len);
          auto pa = detail::wrap(s.position + 4, len);
          std::vector<Endpoint> word;
          for (std::size_t i = 0; i < len; ++i) {
            if (i == pb)
              word.push_back(d.at(pa));
            else if (i == pa)
              word.push_back(d.at(pb));
            else if (d.at(i).chord != who.c3 && d.at(i).chord != who.c4)
              word.push_back(d.at(i));
          }
          auto signs = d.signs();
          signs.erase(who.c3);
          signs.erase(who.c4);
          auto out = GaussDiagram::from_word(std::move(word), signs);
          if (auto why = detail::s2_violation(d, out, who, false))
            throw S2ConstraintUnsatisfiable("S2_remove: " + *why);
          return out;
        }
      },
      site);
}

/// All sites of `kind`. Add kinds list every gap and free choice; R1_remove
/// and R2_remove report one site per chord or chord pair.
inline std::vector<DiagramMoveSite> enumerate_moves(const GaussDiagram& d, MoveKind kind) {
  std::vector<DiagramMoveSite> out;
  const auto len = d.length();
  const auto gaps = detail::gap_count(d);
  switch (kind) {
    case MoveKind::R1Add:
      for (std::size_t g = 0; g < gaps; ++g)
        for (auto s : {Sign::Positive, Sign::Negative})
          for (auto r : {Role::Over, Role::Under}) out.emplace_back(R1Add{g, s, r});
      break;
    case MoveKind::R1Remove: {
      std::set<ChordId> seen;
      for (std::size_t p = 0; p < len; ++p) {
        auto c = d.at(p).chord;
        if (d.at(detail::wrap(p + 1, len)).chord == c && seen.insert(c).second) out.emplace_back(R1Remove{p});
      }
      break;
    }
    case MoveKind::R2Add:
      for (std::size_t a = 0; a < gaps; ++a)
        for (std::size_t b = a; b < gaps; ++b)
          for (auto r : {Role::Over, Role::Under})
            for (bool par : {true, false})
              for (auto s : {Sign::Positive, Sign::Negative}) out.emplace_back(R2Add{a, b, r, par, s});
      break;
    case MoveKind::R2Remove: {
      std::set<std::pair<ChordId, ChordId>> seen;
      for (std::size_t p = 0; p < len; ++p) {
        for (std::size_t q = p + 1; q < len; ++q) {
          R2Remove site{p, q};
          auto pair = detail::r2_pair(d, site);
          if (pair && seen.insert(*pair).second) out.emplace_back(site);
        }
      }
      break;
    }
    case MoveKind::R3: {
      if (len < 6) break;
      std::map<ChordId, std::vector<std::size_t>> segments_of;
      for (std::size_t p = 0; p < len; ++p) {
        auto a = d.at(p).chord;
        auto b = d.at(detail::wrap(p + 1, len)).chord;
        if (a == b) continue;
        segments_of[a].push_back(p);
        segments_of[b].push_back(p);
      }
      auto chords_at = [&](std::size_t p) {
        return std::minmax(d.at(p).chord, d.at(detail::wrap(p + 1, len)).chord);
      };
      std::set<std::array<std::size_t, 3>> found;
      for (const auto& [a, segs] : segments_of) {
        for (auto s0 : segs) {
          for (auto s1 : segs) {
            if (s1 == s0) continue;
            auto [x0, y0] = chords_at(s0);
            auto [x1, y1] = chords_at(s1);
            ChordId b = x0 == a ? y0 : x0;
            ChordId c = x1 == a ? y1 : x1;
            if (b == c) continue;
            for (auto s2 : segments_of[b]) {
              if (chords_at(s2) != std::minmax(b, c)) continue;
              std::array<std::size_t, 3> t{s0, s1, s2};
              std::sort(t.begin(), t.end());
              if (found.contains(t) || !detail::r3_pattern(d, t)) continue;
              found.insert(t);
            }
          }
        }
      }
      for (const auto& t : found) out.emplace_back(R3Move{t});
      break;
    }
    case MoveKind::S1:
      for (std::size_t p = 0; p < len; ++p)
        if (detail::s1_valid(d, p)) out.emplace_back(S1Move{p});
      break;
    case MoveKind::S2Add:
      if (len < 2) break;
      for (std::size_t p = 0; p < len; ++p)
        for (auto s : {Sign::Positive, Sign::Negative})
          if (solve_s2_directions(d, S2Add{p, s})) out.emplace_back(S2Add{p, s});
      break;
    case MoveKind::S2Remove:
      for (std::size_t p = 0; p < len; ++p) {
        if (!detail::s2_block_valid(d, p)) continue;
        try {
          (void)apply_move(d, S2Remove{p});
          out.emplace_back(S2Remove{p});
        } catch (const S2ConstraintUnsatisfiable&) {
        }
      }
      break;
  }
  return out;
}

/// One site of `kind` drawn at random, or nullopt if none applies. Add kinds
/// draw their parameters directly instead of enumerating.
template <class Rng>
std::optional<DiagramMoveSite> random_move_site(const GaussDiagram& d, MoveKind kind, Rng& rng) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto coin = [&] { return pick(2) == 0; };
  auto sign = [&] { return coin() ? Sign::Positive : Sign::Negative; };
  auto role = [&] { return coin() ? Role::Over : Role::Under; };
  const auto gaps = detail::gap_count(d);
  switch (kind) {
    case MoveKind::R1Add:
      return R1Add{pick(gaps), sign(), role()};
    case MoveKind::R2Add: {
      auto a = pick(gaps);
      auto b = pick(gaps);
      return R2Add{std::min(a, b), std::max(a, b), role(), coin(), sign()};
    }
    case MoveKind::S2Add:
      if (d.length() < 2) return std::nullopt;
      return S2Add{pick(d.length()), sign()};
    default: {
      auto sites = enumerate_moves(d, kind);
      if (sites.empty()) return std::nullopt;
      return sites[pick(sites.size())];
    }
  }
}

/// Serialized form of the lexicographically least rotation, each rotation
/// relabeled by first appearance. Equal exactly for diagrams that agree up to
/// rotation and chord renaming.
inline std::string canonical_form(const GaussDiagram& d) {
  const auto len = d.length();
  if (len == 0) return "";
  std::string best;
  for (std::size_t r = 0; r < len; ++r) {
    std::vector<Endpoint> word;
    word.reserve(len);
    for (std::size_t i = 0; i < len; ++i) word.push_back(d.at((r + i) % len));
    auto s = serialize_gauss_code(GaussDiagram::from_word(std::move(word), d.signs()));
    if (r == 0 || s < best) best = std::move(s);
  }
  return best;
}

inline nlohmann::ordered_json move_site_to_json(const DiagramMoveSite& site) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(move_kind_name(kind_of(site)));
  auto role_str = [](Role r) { return std::string(1, role_char(r)); };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, R1Add>) {
          j["gap"] = s.gap;
          j["sign"] = value(s.sign);
          j["first_role"] = role_str(s.first_role);
        } else if constexpr (std::is_same_v<T, R2Add>) {
          j["gap_a"] = s.gap_a;
          j["gap_b"] = s.gap_b;
          j["role_a"] = role_str(s.role_a);
          j["parallel"] = s.parallel;
          j["sign"] = value(s.sign);
        } else if constexpr (std::is_same_v<T, R2Remove>) {
          j["first"] = s.first;
          j["second"] = s.second;
        } else if constexpr (std::is_same_v<T, R3Move>) {
          j["starts"] = s.starts;
        } else if constexpr (std::is_same_v<T, S2Add>) {
          j["position"] = s.position;
          j["shell_sign"] = value(s.shell_sign);
        } else {
          j["position"] = s.position;
        }
      },
      site);
  return j;
}

inline DiagramMoveSite move_site_from_json(const nlohmann::json& j) {
  try {
    auto kind = move_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw InvalidSite("unknown move kind " + j.at("kind").dump());
    auto num = [&](const char* key) { return j.at(key).get<std::size_t>(); };
    auto sign = [&](const char* key) { return j.at(key).get<int>() < 0 ? Sign::Negative : Sign::Positive; };
    auto role = [&](const char* key) {
      auto r = j.at(key).get<std::string>();
      if (r != "O" && r != "U") throw InvalidSite("role must be \"O\" or \"U\"");
      return r == "O" ? Role::Over : Role::Under;
    };
    switch (*kind) {
      case MoveKind::R1Add: return R1Add{num("gap"), sign("sign"), role("first_role")};
      case MoveKind::R1Remove: return R1Remove{num("position")};
      case MoveKind::R2Add:
        return R2Add{num("gap_a"), num("gap_b"), role("role_a"), j.at("parallel").get<bool>(), sign("sign")};
      case MoveKind::R2Remove: return R2Remove{num("first"), num("second")};
      case MoveKind::R3: return R3Move{j.at("starts").get<std::array<std::size_t, 3>>()};
      case MoveKind::S1: return S1Move{num("position")};
      case MoveKind::S2Add: return S2Add{num("position"), sign("shell_sign")};
      case MoveKind::S2Remove: return S2Remove{num("position")};
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSite(std::string("malformed move site: ") + e.what());
  }
  throw InvalidSite("unreachable");
}

}  // namespace vknot
