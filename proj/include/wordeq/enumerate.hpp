#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wordeq/word.hpp"

namespace wordeq {

// Visits every string of length `len` over `letters`, in the order the
// letters are given (lexicographic when `letters` is sorted). `fn` receives a
// std::string_view that is only valid for the duration of the call.
template <class Fn>
void for_each_sequence(std::string_view letters, std::size_t len, Fn&& fn) {
  if (letters.empty()) {
    if (len == 0) fn(std::string_view{});
    return;
  }
  std::vector<std::size_t> digits(len, 0);
  std::string buf(len, letters[0]);
  while (true) {
    fn(std::string_view(buf));
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < letters.size()) {
        buf[pos] = letters[digits[pos]];
        break;
      }
      digits[pos] = 0;
      buf[pos] = letters[0];
      if (pos == 0) return;
    }
    if (len == 0) return;
  }
}

inline std::string alphabet_letters(const Alphabet& alphabet) {
  std::string out;
  for (int c = 0; c < alphabet.size(); ++c) out += alphabet.letter(c);
  return out;
}

/// Calls `fn(const Word&)` for every word of exactly `len` letters.
template <class Fn>
void for_each_word(const Alphabet& alphabet, std::size_t len, Fn&& fn) {
  for_each_sequence(alphabet_letters(alphabet), len, [&](std::string_view s) {
    fn(Word::from_trusted(std::string(s)));
  });
}

/// All words with min_len <= length <= max_len, shortlex order.
inline std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len,
                                     std::size_t min_len = 1) {
  std::vector<Word> out;
  for (std::size_t n = min_len; n <= max_len; ++n) {
    for_each_word(alphabet, n, [&](const Word& w) { out.push_back(w); });
  }
  return out;
}

}  // namespace wordeq
