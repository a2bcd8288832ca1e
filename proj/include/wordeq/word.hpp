#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordeq {

// Raised when an operation is called outside its domain.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a bounded check finds a configuration a structural result rules
// out. Reaching one of these means either the library or the result is wrong.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kMaxAlphabet = 26;

/// A finite word over the letters 'a'..'z'.
///
/// The empty word is a valid value and is the identity for concatenation.
/// Words compare lexicographically with a proper prefix ordered first.
class Word {
 public:
  Word() = default;

  explicit Word(std::string_view letters) : letters_(letters) {
    for (char c : letters_) {
      if (c < 'a' || c > 'z') {
        throw precondition_error("word letters must be in 'a'..'z', got '" +
                                 std::string(1, c) + "'");
      }
    }
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t pos) const { return letters_[pos]; }

  std::string_view view() const noexcept { return letters_; }
  const std::string& str() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word prefix(std::size_t n) const { return from_trusted(letters_.substr(0, n)); }
  Word suffix(std::size_t n) const {
    return n >= size() ? *this : from_trusted(letters_.substr(size() - n));
  }
  Word substr(std::size_t pos, std::size_t n = std::string::npos) const {
    return from_trusted(letters_.substr(pos, n));
  }
  Word reversed() const { return from_trusted(std::string(letters_.rbegin(), letters_.rend())); }

  bool starts_with(const Word& p) const noexcept { return view().starts_with(p.view()); }
  bool ends_with(const Word& s) const noexcept { return view().ends_with(s.view()); }

  Word& operator+=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.letters_.compare(b.letters_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.letters_;
  }

  // Skips validation; callers guarantee the letters are already valid.
  static Word from_trusted(std::string letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
  }

 private:
  std::string letters_;
};

/// w^n; the empty word for n = 0.
inline Word power(const Word& w, std::size_t n) {
  std::string out;
  out.reserve(w.size() * n);
  for (std::size_t t = 0; t < n; ++t) out += w.view();
  return Word::from_trusted(std::move(out));
}

/// The first `size` letters of 'a'..'z'.
class Alphabet {
 public:
  explicit Alphabet(int size = 2) : size_(size) {
    if (size < 2 || size > kMaxAlphabet) {
      throw precondition_error("alphabet size must be in 2..26, got " + std::to_string(size));
    }
  }

  int size() const noexcept { return size_; }
  char letter(int index) const noexcept { return static_cast<char>('a' + index); }
  bool contains(char c) const noexcept { return c >= 'a' && c < 'a' + size_; }

  bool contains(const Word& w) const noexcept {
    for (char c : w) {
      if (!contains(c)) return false;
    }
    return true;
  }

  /// Parses `text` and rejects letters outside the alphabet.
  Word parse(std::string_view text) const {
    Word w(text);
    if (!contains(w)) {
      throw precondition_error("word '" + std::string(text) + "' uses letters outside an alphabet of size " +
                               std::to_string(size_));
    }
    return w;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

namespace literals {
inline Word operator""_w(const char* s, std::size_t n) { return Word(std::string_view(s, n)); }
}  // namespace literals

}  // namespace wordeq

template <>
struct std::hash<wordeq::Word> {
  std::size_t operator()(const wordeq::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.view());
  }
};
