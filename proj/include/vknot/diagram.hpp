#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vknot/core.hpp"

namespace vknot {

struct Endpoint {
  ChordId chord;
  Role role = Role::Over;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct ChordData {
  Sign sign = Sign::Positive;
  std::size_t over_pos = 0;   ///< tail
  std::size_t under_pos = 0;  ///< head

  friend bool operator==(const ChordData&, const ChordData&) = default;
};

/// A Gauss diagram: the counterclockwise word of 2n chord endpoints together
/// with the sign of each chord. Instances are immutable once built; every
/// rewrite produces a new diagram.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Builds and validates a diagram. Every chord must occur exactly once as
  /// Over and once as Under, and `signs` must name exactly the chords used.
  static GaussDiagram from_word(std::vector<Endpoint> word, const std::map<ChordId, Sign>& signs) {
    GaussDiagram d;
    d.word_ = std::move(word);
    struct Seen {
      int over = 0;
      int under = 0;
      std::size_t over_pos = 0;
      std::size_t under_pos = 0;
    };
    std::map<ChordId, Seen> seen;
    for (std::size_t p = 0; p < d.word_.size(); ++p) {
      const auto& ep = d.word_[p];
      if (ep.chord.value < 0) throw RoleError("chord ids must be nonnegative");
      auto& s = seen[ep.chord];
      if (ep.role == Role::Over) {
        ++s.over;
        s.over_pos = p;
      } else {
        ++s.under;
        s.under_pos = p;
      }
    }
    for (const auto& [id, s] : seen) {
      if (s.over != 1 || s.under != 1)
        throw RoleError("chord " + std::to_string(id.value) + " must appear exactly once as O and once as U (saw " +
                        std::to_string(s.over) + " O, " + std::to_string(s.under) + " U)");
      auto it = signs.find(id);
      if (it == signs.end()) throw RoleError("chord " + std::to_string(id.value) + " has no sign");
      d.chords_.emplace(id, ChordData{it->second, s.over_pos, s.under_pos});
    }
    if (signs.size() != d.chords_.size()) throw RoleError("sign given for a chord with no endpoints");
    return d;
  }

  [[nodiscard]] std::size_t size() const noexcept { return chords_.size(); }
  [[nodiscard]] std::size_t length() const noexcept { return word_.size(); }
  [[nodiscard]] bool empty() const noexcept { return chords_.empty(); }

  [[nodiscard]] std::span<const Endpoint> word() const noexcept { return word_; }
  [[nodiscard]] const Endpoint& at(std::size_t pos) const { return word_.at(pos); }
  [[nodiscard]] const std::map<ChordId, ChordData>& chords() const noexcept { return chords_; }

  [[nodiscard]] bool contains(ChordId c) const { return chords_.contains(c); }

  [[nodiscard]] const ChordData& chord(ChordId c) const {
    auto it = chords_.find(c);
    if (it == chords_.end()) throw UnknownChord("unknown chord " + std::to_string(c.value));
    return it->second;
  }

  [[nodiscard]] Sign sign(ChordId c) const { return chord(c).sign; }
  [[nodiscard]] std::size_t tail(ChordId c) const { return chord(c).over_pos; }
  [[nodiscard]] std::size_t head(ChordId c) const { return chord(c).under_pos; }

  [[nodiscard]] std::size_t position(ChordId c, Role r) const { return r == Role::Over ? tail(c) : head(c); }

  /// The endpoint of `c` other than the one at `pos`.
  [[nodiscard]] std::size_t mate(std::size_t pos) const {
    const auto& ep = word_.at(pos);
    return position(ep.chord, opposite(ep.role));
  }

  /// Smallest id strictly greater than every chord id in use.
  [[nodiscard]] ChordId next_id() const {
    return chords_.empty() ? ChordId{1} : ChordId{chords_.rbegin()->first.value + 1};
  }

  [[nodiscard]] std::map<ChordId, Sign> signs() const {
    std::map<ChordId, Sign> s;
    for (const auto& [id, c] : chords_) s.emplace(id, c.sign);
    return s;
  }

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return a.word_ == b.word_ && a.chords_ == b.chords_;
  }

 private:
  std::vector<Endpoint> word_;
  std::map<ChordId, ChordData> chords_;
};

namespace detail {

/// True iff x lies strictly inside the counterclockwise arc from a to b.
constexpr bool on_open_arc(std::size_t a, std::size_t b, std::size_t x, std::size_t len) noexcept {
  auto dx = (x + len - a) % len;
  auto db = (b + len - a) % len;
  return dx > 0 && dx < db;
}

inline bool positions_interleave(std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2,
                                 std::size_t len) noexcept {
  return on_open_arc(a1, a2, b1, len) != on_open_arc(a1, a2, b2, len);
}

}  // namespace detail

/// Parses whitespace-separated `O<id><sign>` / `U<id><sign>` tokens.
inline GaussDiagram parse_gauss_code(std::string_view text) {
  std::vector<Endpoint> word;
  std::map<ChordId, Sign> signs;
  std::size_t i = 0;
  auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    auto bad = [&](const char* why) { return BadToken("bad token \"" + std::string(tok) + "\": " + why); };
    if (tok.size() < 3) throw bad("too short");
    Role role;
    if (tok.front() == 'O' || tok.front() == 'o') {
      role = Role::Over;
    } else if (tok.front() == 'U' || tok.front() == 'u') {
      role = Role::Under;
    } else {
      throw bad("expected O or U");
    }
    Sign sign;
    if (tok.back() == '+') {
      sign = Sign::Positive;
    } else if (tok.back() == '-') {
      sign = Sign::Negative;
    } else {
      throw bad("expected trailing + or -");
    }
    auto digits = tok.substr(1, tok.size() - 2);
    std::int64_t id = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad("chord id must be a nonnegative integer");
      id = id * 10 + (ch - '0');
      if (id > (std::int64_t{1} << 40)) throw bad("chord id too large");
    }
    ChordId c{id};
    auto [it, inserted] = signs.try_emplace(c, sign);
    if (!inserted && it->second != sign)
      throw SignMismatch("chord " + std::to_string(id) + " has conflicting signs");
    word.push_back({c, role});
  }
  return GaussDiagram::from_word(std::move(word), signs);
}

/// Relabels chords 1, 2, ... in order of first appearance along the word.
inline GaussDiagram relabel_by_first_appearance(const GaussDiagram& d) {
  std::map<ChordId, ChordId> rename;
  std::vector<Endpoint> word;
  std::map<ChordId, Sign> signs;
  word.reserve(d.length());
  for (const auto& ep : d.word()) {
    auto [it, inserted] = rename.try_emplace(ep.chord, ChordId{static_cast<std::int64_t>(rename.size()) + 1});
    if (inserted) signs.emplace(it->second, d.sign(ep.chord));
    word.push_back({it->second, ep.role});
  }
  return GaussDiagram::from_word(std::move(word), signs);
}

/// Single-space token word, chords renumbered by first appearance from 1.
inline std::string serialize_gauss_code(const GaussDiagram& d) {
  std::map<ChordId, std::int64_t> rename;
  std::string out;
  for (const auto& ep : d.word()) {
    auto [it, inserted] = rename.try_emplace(ep.chord, static_cast<std::int64_t>(rename.size()) + 1);
    if (!out.empty()) out += ' ';
    out += role_char(ep.role);
    out += std::to_string(it->second);
    out += sign_char(d.sign(ep.chord));
  }
  return out;
}

/// Chords cross iff exactly one endpoint of `c2` lies on the open arc between
/// the endpoints of `c1`. A chord does not cross itself.
inline bool interleaves(const GaussDiagram& d, ChordId c1, ChordId c2) {
  const auto& a = d.chord(c1);
  const auto& b = d.chord(c2);
  if (c1 == c2) return false;
  return detail::positions_interleave(a.over_pos, a.under_pos, b.over_pos, b.under_pos, d.length());
}

/// +1 when `x` crosses `c` left to right, -1 right to left. Convention: +1 iff
/// the tail of `x` lies on the counterclockwise arc from head(c) to tail(c).
inline int crossing_sense(const GaussDiagram& d, ChordId c, ChordId x) {
  if (!interleaves(d, c, x))
    throw NotCrossing("chords " + std::to_string(c.value) + " and " + std::to_string(x.value) + " do not cross");
  const auto& cc = d.chord(c);
  return detail::on_open_arc(cc.under_pos, cc.over_pos, d.tail(x), d.length()) ? 1 : -1;
}

/// Word of `a` followed by the word of `b`, with b's chords renumbered above a's.
inline GaussDiagram connected_sum(const GaussDiagram& a, const GaussDiagram& b) {
  std::vector<Endpoint> word(a.word().begin(), a.word().end());
  auto signs = a.signs();
  const std::int64_t offset = a.next_id().value;
  std::map<ChordId, ChordId> rename;
  for (const auto& ep : b.word()) {
    auto [it, inserted] = rename.try_emplace(ep.chord, ChordId{offset + static_cast<std::int64_t>(rename.size())});
    if (inserted) signs.emplace(it->second, b.sign(ep.chord));
    word.push_back({it->second, ep.role});
  }
  return GaussDiagram::from_word(std::move(word), signs);
}

/// Swaps over/under at chord `c` and negates its sign.
inline GaussDiagram crossing_switch(const GaussDiagram& d, ChordId c) {
  (void)d.chord(c);
  std::vector<Endpoint> word(d.word().begin(), d.word().end());
  for (auto& ep : word)
    if (ep.chord == c) ep.role = opposite(ep.role);
  auto signs = d.signs();
  signs[c] = -signs[c];
  return GaussDiagram::from_word(std::move(word), signs);
}

/// Reverses the circle and negates every sign; this negates the writhe polynomial.
inline GaussDiagram reversed_mirror(const GaussDiagram& d) {
  std::vector<Endpoint> word(d.word().rbegin(), d.word().rend());
  auto signs = d.signs();
  for (auto& [id, s] : signs) s = -s;
  return GaussDiagram::from_word(std::move(word), signs);
}

/// Uniform random diagram on chords 1..n with independent uniform signs and
/// over/under assignment. Deterministic in (n, seed).
inline GaussDiagram random_diagram(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> slots;
  slots.reserve(2 * n);
  for (std::size_t c = 1; c <= n; ++c) {
    slots.push_back(static_cast<std::int64_t>(c));
    slots.push_back(static_cast<std::int64_t>(c));
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::map<ChordId, Sign> signs;
  std::map<ChordId, Role> first_role;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t c = 1; c <= n; ++c) {
    ChordId id{static_cast<std::int64_t>(c)};
    signs.emplace(id, coin(rng) ? Sign::Positive : Sign::Negative);
    first_role.emplace(id, coin(rng) ? Role::Over : Role::Under);
  }
  std::vector<Endpoint> word;
  word.reserve(slots.size());
  std::map<ChordId, bool> seen;
  for (auto v : slots) {
    ChordId id{v};
    Role r = first_role[id];
    if (seen[id]) r = opposite(r);
    seen[id] = true;
    word.push_back({id, r});
  }
  return GaussDiagram::from_word(std::move(word), signs);
}

inline nlohmann::ordered_json diagram_to_json(const GaussDiagram& d) {
  nlohmann::ordered_json j;
  j["endpoints"] = nlohmann::ordered_json::array();
  for (const auto& ep : d.word())
    j["endpoints"].push_back({{"chord", ep.chord.value}, {"role", std::string(1, role_char(ep.role))}});
  j["signs"] = nlohmann::ordered_json::object();
  for (const auto& [id, c] : d.chords()) j["signs"][std::to_string(id.value)] = value(c.sign);
  return j;
}

inline GaussDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    std::vector<Endpoint> word;
    for (const auto& e : j.at("endpoints")) {
      auto role = e.at("role").get<std::string>();
      if (role != "O" && role != "U") throw BadToken("role must be \"O\" or \"U\"");
      word.push_back({ChordId{e.at("chord").get<std::int64_t>()}, role == "O" ? Role::Over : Role::Under});
    }
    std::map<ChordId, Sign> signs;
    for (const auto& [key, val] : j.at("signs").items()) {
      auto s = val.get<int>();
      if (s != 1 && s != -1) throw BadToken("sign must be 1 or -1");
      signs.emplace(ChordId{std::stoll(key)}, sign_of(s));
    }
    return GaussDiagram::from_word(std::move(word), signs);
  } catch (const nlohmann::json::exception& e) {
    throw BadToken(std::string("malformed diagram JSON: ") + e.what());
  }
}

}  // namespace vknot
