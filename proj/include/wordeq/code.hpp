#pragma once

// The binary code X = {x, y}: factorization over X, X-primitivity,
// X-conjugacy, and bounded enumerations of the imprimitive words of X*.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordeq/core.hpp"
#include "wordeq/enumerate.hpp"
#include "wordeq/word.hpp"

namespace wordeq {

enum class CodeLetter : char { x = 'x', y = 'y' };

/// An element of X*, written as its sequence of code letters ("xxy").
class CodeWord {
 public:
  CodeWord() = default;

  explicit CodeWord(std::string_view letters) : letters_(letters) {
    for (char c : letters_) {
      if (c != 'x' && c != 'y') {
        throw precondition_error("code letters must be 'x' or 'y', got '" + std::string(1, c) + "'");
      }
    }
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  CodeLetter operator[](std::size_t pos) const { return static_cast<CodeLetter>(letters_[pos]); }
  std::string_view letters() const noexcept { return letters_; }

  std::size_t count(CodeLetter c) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), static_cast<char>(c)));
  }

  CodeWord& operator+=(CodeLetter c) {
    letters_ += static_cast<char>(c);
    return *this;
  }

  friend bool operator==(const CodeWord&, const CodeWord&) = default;
  friend auto operator<=>(const CodeWord& a, const CodeWord& b) noexcept {
    return a.letters_.compare(b.letters_) <=> 0;
  }
  friend std::ostream& operator<<(std::ostream& os, const CodeWord& c) { return os << c.letters_; }

 private:
  std::string letters_;
};

/// c1 c2 ... cn over a single code letter repeated, e.g. repeat(x, 3) = "xxx".
inline CodeWord repeat(CodeLetter c, std::size_t n) {
  return CodeWord(std::string(n, static_cast<char>(c)));
}

inline CodeWord operator+(CodeWord a, const CodeWord& b) {
  for (std::size_t t = 0; t < b.size(); ++t) a += b[t];
  return a;
}

/// A pair of non-commuting words. Non-commutation is exactly the condition for
/// {x, y} to be a code, so every word of X* factorizes uniquely.
class BinaryCode {
 public:
  BinaryCode(Word x, Word y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.empty() || y_.empty()) throw precondition_error("code words must be non-empty");
    if (wordeq::commutes(x_, y_)) {
      throw precondition_error("x and y commute, so {x, y} is not a binary code");
    }
  }

  const Word& x() const noexcept { return x_; }
  const Word& y() const noexcept { return y_; }
  const Word& operator[](CodeLetter c) const noexcept { return c == CodeLetter::x ? x_ : y_; }

  Word expand(const CodeWord& c) const {
    std::string out;
    for (std::size_t t = 0; t < c.size(); ++t) out += (*this)[c[t]].view();
    return Word::from_trusted(std::move(out));
  }

 private:
  Word x_;
  Word y_;
};

namespace detail {

inline bool decode_from(std::string_view w, const BinaryCode& code, std::string& letters) {
  if (w.empty()) return true;
  for (CodeLetter c : {CodeLetter::x, CodeLetter::y}) {
    const std::string_view piece = code[c].view();
    if (w.starts_with(piece)) {
      letters.push_back(static_cast<char>(c));
      if (decode_from(w.substr(piece.size()), code, letters)) return true;
      letters.pop_back();
    }
  }
  return false;
}

}  // namespace detail

/// The factorization of w over {x, y}, if there is one.
inline std::optional<CodeWord> decode(const Word& w, const BinaryCode& code) {
  std::string letters;
  if (!detail::decode_from(w.view(), code, letters)) return std::nullopt;
  return CodeWord(letters);
}

/// Primitivity measured in code letters, never on the expansion.
inline bool is_x_primitive(const CodeWord& c) {
  if (c.empty()) throw precondition_error("empty code word has no primitive root");
  return detail::root_length(c.letters()) == c.size();
}

inline bool are_x_conjugate(const CodeWord& c1, const CodeWord& c2) {
  return detail::is_rotation(c1.letters(), c2.letters());
}

/// Members of {x y^n : 1 <= n <= max_exp} ∪ {x^n y : 1 <= n <= max_exp} whose
/// expansion is imprimitive. xy belongs to both halves and is listed once.
inline std::vector<CodeWord> imprimitive_in_cross_set(const BinaryCode& code, std::size_t max_exp) {
  if (max_exp < 1) throw precondition_error("max_exp must be at least 1");
  std::vector<CodeWord> candidates;
  for (std::size_t n = 1; n <= max_exp; ++n) {
    candidates.push_back(CodeWord("x") + repeat(CodeLetter::y, n));
  }
  for (std::size_t n = 2; n <= max_exp; ++n) {
    candidates.push_back(repeat(CodeLetter::x, n) + CodeWord("y"));
  }
  std::vector<CodeWord> out;
  for (const auto& c : candidates) {
    if (!is_primitive(code.expand(c))) out.push_back(c);
  }
  return out;
}

enum class ImprimitiveShape { empty, x_centered, y_centered };

inline std::string_view to_string(ImprimitiveShape s) {
  switch (s) {
    case ImprimitiveShape::empty: return "empty";
    case ImprimitiveShape::x_centered: return "x-centered";
    case ImprimitiveShape::y_centered: return "y-centered";
  }
  return "?";
}

/// X-primitive words of X^+ \ X with imprimitive expansion, restricted to a
/// code-length bound.
///
/// x-centered(k) means the members are exactly {x^i y x^(k-i) : 0 <= i <= k};
/// y-centered(k) swaps the roles of x and y.
struct ImprimitiveSet {
  std::vector<CodeWord> members;  // sorted
  ImprimitiveShape shape = ImprimitiveShape::empty;
  std::size_t k = 0;

  static std::vector<CodeWord> expected_members(ImprimitiveShape shape, std::size_t k) {
    std::vector<CodeWord> out;
    if (shape == ImprimitiveShape::empty) return out;
    const CodeLetter outer = shape == ImprimitiveShape::x_centered ? CodeLetter::x : CodeLetter::y;
    const CodeLetter inner = outer == CodeLetter::x ? CodeLetter::y : CodeLetter::x;
    for (std::size_t i = 0; i <= k; ++i) {
      out.push_back(repeat(outer, i) + repeat(inner, 1) + repeat(outer, k - i));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool satisfies_shape() const { return members == expected_members(shape, k); }
};

inline ImprimitiveSet x_primitive_imprimitive_set(const BinaryCode& code, std::size_t max_code_len) {
  if (max_code_len < 2) throw precondition_error("max_code_len must be at least 2");
  ImprimitiveSet set;
  for (std::size_t n = 2; n <= max_code_len; ++n) {
    for_each_sequence("xy", n, [&](std::string_view letters) {
      CodeWord c(letters);
      if (is_x_primitive(c) && !is_primitive(code.expand(c))) set.members.push_back(c);
    });
  }
  std::sort(set.members.begin(), set.members.end());
  if (set.members.empty()) return set;

  const CodeWord& first = set.members.front();
  set.k = first.size() - 1;
  set.shape = first.count(CodeLetter::y) == 1 ? ImprimitiveShape::x_centered : ImprimitiveShape::y_centered;
  if (!set.satisfies_shape()) {
    std::string listed;
    for (const auto& m : set.members) listed += std::string(m.letters()) + " ";
    throw invariant_violation("imprimitive X-primitive set has an impossible shape for x=" + code.x().str() +
                              " y=" + code.y().str() + ": " + listed);
  }
  return set;
}

/// Witnessed shape of an X-primitive word whose expansion is a proper power:
/// outer^before inner outer^after, where {outer, inner} = {x, y}.
struct XPowerShape {
  CodeLetter outer = CodeLetter::x;
  std::size_t before = 0;
  std::size_t after = 0;

  CodeWord letters() const {
    const CodeLetter inner = outer == CodeLetter::x ? CodeLetter::y : CodeLetter::x;
    return repeat(outer, before) + repeat(inner, 1) + repeat(outer, after);
  }

  friend bool operator==(const XPowerShape&, const XPowerShape&) = default;
};

/// For c X-primitive with expansion z^exponent (exponent >= 2), returns the
/// form x^k y x^l or y^k x y^l that c must take. The x-form is preferred
/// when both apply (c = xy or yx).
inline XPowerShape classify_x_power(const BinaryCode& code, const CodeWord& c, std::size_t exponent) {
  const auto reject = [] { return precondition_error("not an imprimitive X-primitive word"); };
  if (c.empty() || exponent < 2 || !is_x_primitive(c)) throw reject();
  const Word w = code.expand(c);
  if (w.size() % exponent != 0 || power(w.prefix(w.size() / exponent), exponent) != w) throw reject();

  for (CodeLetter outer : {CodeLetter::x, CodeLetter::y}) {
    const CodeLetter inner = outer == CodeLetter::x ? CodeLetter::y : CodeLetter::x;
    if (c.count(inner) != 1) continue;
    const auto pos = c.letters().find(static_cast<char>(inner));
    return XPowerShape{outer, pos, c.size() - pos - 1};
  }
  throw invariant_violation("X-primitive power " + std::string(c.letters()) + " for x=" + code.x().str() +
                            " y=" + code.y().str() + " has more than one of each code letter");
}

}  // namespace wordeq
