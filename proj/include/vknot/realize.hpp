#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

/// P covers exponents k >= 2, N covers k <= -2, T is the trefoil (k = 1).
enum class Family { P, N, T };

inline constexpr char family_char(Family f) { return f == Family::P ? 'P' : f == Family::N ? 'N' : 'T'; }

struct GeneratorSpec {
  Family family = Family::T;
  std::int64_t k = 1;
  int orientation = 1;  ///< +1 contributes +basis, -1 contributes -basis

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

inline void validate(const GeneratorSpec& s) {
  if (s.orientation != 1 && s.orientation != -1) throw BadSpec("orientation must be +1 or -1");
  switch (s.family) {
    case Family::P:
      if (s.k < 2) throw BadSpec("family P needs k >= 2");
      break;
    case Family::N:
      if (s.k > -2) throw BadSpec("family N needs k <= -2");
      break;
    case Family::T:
      if (s.k != 1) throw BadSpec("family T takes k = 1");
      break;
  }
}

/// P: t^k - k t + (k - 1).  N: t^k - |k| t^-1 + (|k| - 1).  T: t + t^-1 - 2.
inline LaurentPolynomial basis(const GeneratorSpec& s) {
  validate(s);
  LaurentPolynomial b;
  const std::int64_t m = std::llabs(s.k);
  switch (s.family) {
    case Family::P:
      b.add_term(s.k, 1);
      b.add_term(1, -m);
      b.add_term(0, m - 1);
      break;
    case Family::N:
      b.add_term(s.k, 1);
      b.add_term(-1, -m);
      b.add_term(0, m - 1);
      break;
    case Family::T:
      b.add_term(1, 1);
      b.add_term(-1, 1);
      b.add_term(0, -2);
      break;
  }
  return b;
}

/// A positive main chord crossed by |k| negative satellites that do not cross
/// one another. For P the main chord runs so that every satellite crosses it
/// right to left; N reverses the main chord. Orientation -1 takes the
/// reversed mirror image, which negates the polynomial.
inline GaussDiagram generator_diagram(const GeneratorSpec& s) {
  validate(s);
  GaussDiagram d;
  if (s.family == Family::T) {
    d = parse_gauss_code("O1+ O2+ U1+ U2+");
  } else {
    const std::int64_t m = std::llabs(s.k);
    const Role first = s.family == Family::P ? Role::Over : Role::Under;
    std::vector<Endpoint> word;
    std::map<ChordId, Sign> signs{{ChordId{1}, Sign::Positive}};
    word.push_back({ChordId{1}, first});
    for (std::int64_t c = 2; c <= m + 1; ++c) {
      word.push_back({ChordId{c}, Role::Over});
      signs.emplace(ChordId{c}, Sign::Negative);
    }
    word.push_back({ChordId{1}, opposite(first)});
    for (std::int64_t c = m + 1; c >= 2; --c) word.push_back({ChordId{c}, Role::Under});
    d = GaussDiagram::from_word(std::move(word), signs);
  }
  return s.orientation == 1 ? d : reversed_mirror(d);
}

struct DecompositionTerm {
  GeneratorSpec spec;
  std::int64_t multiplicity = 0;

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// Generators whose polynomials sum to f: P and N terms from the exponents of
/// absolute value at least 2, then a multiple of the trefoil for the rest.
inline std::vector<DecompositionTerm> decompose(const LaurentPolynomial& f) {
  if (!is_realizable(f))
    throw NotRealizable("not realizable: f(1) = " + std::to_string(f.eval_at_one()) +
                        ", f'(1) = " + std::to_string(f.derivative_at_one()));
  std::vector<DecompositionTerm> out;
  LaurentPolynomial rest = f;
  auto take = [&](GeneratorSpec spec, std::int64_t a) {
    if (a == 0) return;
    spec.orientation = a > 0 ? 1 : -1;
    out.push_back({spec, std::llabs(a)});
    rest -= basis(spec).scaled(spec.orientation * std::llabs(a));
  };
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    if (it->first >= 2) take({Family::P, it->first, 1}, it->second);
  for (const auto& [e, c] : f.terms())
    if (e <= -2) take({Family::N, e, 1}, c);
  take({Family::T, 1, 1}, rest.coefficient(1));
  if (!rest.is_zero()) throw NotRealizable("remainder " + format_poly(rest) + " is not a trefoil multiple");
  return out;
}

inline constexpr std::size_t kMaxRealizedChords = 200000;

/// Connected sum of the generators of decompose(f), in decomposition order.
inline GaussDiagram realize(const LaurentPolynomial& f, std::size_t max_chords = kMaxRealizedChords) {
  auto terms = decompose(f);
  std::size_t total = 0;
  for (const auto& t : terms) {
    std::size_t per = t.spec.family == Family::T ? 2 : static_cast<std::size_t>(std::llabs(t.spec.k)) + 1;
    total += per * static_cast<std::size_t>(t.multiplicity);
    if (total > max_chords)
      throw SizeLimit("realization would need more than " + std::to_string(max_chords) + " chords");
  }
  std::vector<Endpoint> word;
  std::map<ChordId, Sign> signs;
  std::int64_t offset = 0;
  for (const auto& t : terms) {
    auto g = generator_diagram(t.spec);
    for (std::int64_t r = 0; r < t.multiplicity; ++r) {
      for (const auto& ep : g.word()) word.push_back({ChordId{ep.chord.value + offset}, ep.role});
      for (const auto& [id, c] : g.chords()) signs.emplace(ChordId{id.value + offset}, c.sign);
      offset += g.next_id().value;
    }
  }
  return GaussDiagram::from_word(std::move(word), signs);
}

}  // namespace vknot
