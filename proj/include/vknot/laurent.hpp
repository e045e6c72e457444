#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "vknot/core.hpp"

namespace vknot {

/// Sparse element of Z[t, t^-1]. Zero coefficients are never stored, so the
/// zero polynomial is the empty map and equality is map equality.
class LaurentPolynomial {
 public:
  using Exponent = std::int64_t;
  using Coefficient = std::int64_t;
  using Terms = std::map<Exponent, Coefficient>;

  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(Coefficient c, Exponent e) {
    LaurentPolynomial p;
    p.add_term(e, c);
    return p;
  }

  static LaurentPolynomial constant(Coefficient c) { return monomial(c, 0); }

  void add_term(Exponent e, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  [[nodiscard]] Coefficient coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  /// f(1)
  [[nodiscard]] Coefficient eval_at_one() const {
    Coefficient s = 0;
    for (auto [e, c] : terms_) s += c;
    return s;
  }

  /// f'(1) = sum of exponent * coefficient.
  [[nodiscard]] Coefficient derivative_at_one() const {
    Coefficient s = 0;
    for (auto [e, c] : terms_) s += e * c;
    return s;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) { return a.scaled(-1); }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  [[nodiscard]] LaurentPolynomial scaled(Coefficient k) const {
    LaurentPolynomial r;
    if (k == 0) return r;
    for (auto [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
  }

 private:
  Terms terms_;
};

inline LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + b; }
inline LaurentPolynomial negate(const LaurentPolynomial& a) { return -a; }
inline LaurentPolynomial scale(const LaurentPolynomial& a, LaurentPolynomial::Coefficient k) { return a.scaled(k); }
inline bool equals(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a == b; }
inline LaurentPolynomial::Coefficient eval_at_one(const LaurentPolynomial& f) { return f.eval_at_one(); }
inline LaurentPolynomial::Coefficient derivative_at_one(const LaurentPolynomial& f) { return f.derivative_at_one(); }

/// Input bounds accepted by parse_poly and the JSON reader.
inline constexpr std::int64_t kMaxPolyCoefficient = 1'000'000;
inline constexpr std::int64_t kMaxPolyExponent = 1'000;

namespace detail {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  LaurentPolynomial parse() {
    LaurentPolynomial result;
    skip_space();
    if (at_end()) throw PolyParseError("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coeff, exp] = term();
      coeff *= sign;
      result.add_term(exp, coeff);
      if (std::abs(result.coefficient(exp)) > kMaxPolyCoefficient) fail("coefficient out of range");
      first = false;
      skip_space();
    }
    return result;
  }

 private:
  std::pair<std::int64_t, std::int64_t> term() {
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer(kMaxPolyCoefficient);
      have_coeff = true;
      skip_space();
    }
    if (!at_end() && peek() == '*' && have_coeff) {
      ++pos_;
      skip_space();
      if (at_end() || peek() != 't') fail("expected 't' after '*'");
    }
    if (at_end() || peek() != 't') {
      if (!have_coeff) fail("expected a term");
      return {coeff, 0};
    }
    ++pos_;
    std::int64_t exp = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      int esign = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        esign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      exp = esign * integer(kMaxPolyExponent);
    }
    return {coeff, exp};
  }

  std::int64_t integer(std::int64_t bound) {
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > bound) fail("integer out of range");
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw PolyParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string format_term(std::int64_t abs_coeff, std::int64_t exp) {
  if (exp == 0) return std::to_string(abs_coeff);
  std::string s = abs_coeff == 1 ? "" : std::to_string(abs_coeff);
  s += 't';
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

}  // namespace detail

/// Accepts terms `<int>`, `t`, `t^<int>`, `<int>t`, `<int>t^<int>` joined by `+`/`-`.
inline LaurentPolynomial parse_poly(std::string_view text) { return detail::PolyScanner(text).parse(); }

/// Canonical text: non-constant terms by descending exponent, constant term
/// last, unit coefficients and `t^1` elided. The zero polynomial is "0".
inline std::string format_poly(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  auto emit = [&](std::int64_t e, std::int64_t c) {
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += detail::format_term(c < 0 ? -c : c, e);
  };
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    if (it->first != 0) emit(it->first, it->second);
  if (auto c = f.coefficient(0); c != 0) emit(0, c);
  return out;
}

inline nlohmann::ordered_json poly_to_json(const LaurentPolynomial& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) j[std::to_string(it->first)] = it->second;
  return j;
}

inline LaurentPolynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw PolyParseError("polynomial JSON must be an object");
  LaurentPolynomial f;
  for (const auto& [key, val] : j.items()) {
    std::size_t used = 0;
    std::int64_t e = 0;
    try {
      e = std::stoll(key, &used);
    } catch (const std::exception&) {
      throw PolyParseError("bad exponent key \"" + key + "\"");
    }
    if (used != key.size()) throw PolyParseError("bad exponent key \"" + key + "\"");
    if (!val.is_number_integer()) throw PolyParseError("coefficient must be an integer");
    auto c = val.get<std::int64_t>();
    if (std::abs(e) > kMaxPolyExponent || std::abs(c) > kMaxPolyCoefficient)
      throw PolyParseError("term out of range");
    f.add_term(e, c);
  }
  return f;
}

}  // namespace vknot
