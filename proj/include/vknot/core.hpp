#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace vknot {

/// Crossing sign w(c). Arithmetic helpers treat it as +1 / -1.
enum class Sign : int { Negative = -1, Positive = 1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}

constexpr Sign sign_of(int v) { return v < 0 ? Sign::Negative : Sign::Positive; }

constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

/// Which preimage of a crossing an endpoint is. Chords run Over (tail) -> Under (head).
enum class Role : std::uint8_t { Over, Under };

constexpr Role opposite(Role r) noexcept { return r == Role::Over ? Role::Under : Role::Over; }

constexpr char role_char(Role r) noexcept { return r == Role::Over ? 'O' : 'U'; }

template <class Tag>
struct Id {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(Id, Id) = default;
};

using ChordId = Id<struct ChordTag>;
using VertexId = Id<struct VertexTag>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gauss code text
class BadToken : public Error { public: using Error::Error; };
class RoleError : public Error { public: using Error::Error; };
class SignMismatch : public Error { public: using Error::Error; };

// Lookups and preconditions
class UnknownChord : public Error { public: using Error::Error; };
class UnknownVertex : public Error { public: using Error::Error; };
class NotCrossing : public Error { public: using Error::Error; };
class SizeLimit : public Error { public: using Error::Error; };

// Rewrites
class InvalidSite : public Error { public: using Error::Error; };
class S2ConstraintUnsatisfiable : public Error { public: using Error::Error; };

// Polynomials and realization
class PolyParseError : public Error { public: using Error::Error; };
class NotRealizable : public Error { public: using Error::Error; };
class BadSpec : public Error { public: using Error::Error; };

}  // namespace vknot

template <class Tag>
struct std::hash<vknot::Id<Tag>> {
  std::size_t operator()(vknot::Id<Tag> id) const noexcept {
    return std::hash<std::int64_t>{}(id.value);
  }
};
