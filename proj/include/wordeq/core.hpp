#pragma once

// Exact primitives on finite words: common prefixes and suffixes, borders
// and periods, primitive roots, commutation, conjugacy, and the
// decomposition of solutions of uz = zv.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wordeq/word.hpp"

namespace wordeq {

namespace detail {

inline std::size_t lcp_length(std::string_view a, std::string_view b) noexcept {
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(ia - a.begin());
}

inline std::size_t lcs_length(std::string_view a, std::string_view b) noexcept {
  auto [ia, ib] = std::mismatch(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  return static_cast<std::size_t>(ia - a.rbegin());
}

// border[n] = length of the longest proper border of s[0, n).
inline std::vector<std::size_t> border_table(std::string_view s) {
  std::vector<std::size_t> border(s.size() + 1, 0);
  std::size_t b = 0;
  for (std::size_t pos = 1; pos < s.size(); ++pos) {
    while (b > 0 && s[pos] != s[b]) b = border[b];
    if (s[pos] == s[b]) ++b;
    border[pos + 1] = b;
  }
  return border;
}

inline std::size_t smallest_period(std::string_view s) {
  if (s.empty()) return 0;
  return s.size() - border_table(s).back();
}

// Length of the primitive root. Only a period dividing |s| yields a root; the
// smallest period is the only candidate since any other dividing period is a
// multiple of it (Fine and Wilf).
inline std::size_t root_length(std::string_view s) {
  const std::size_t per = smallest_period(s);
  return (per > 0 && s.size() % per == 0) ? per : s.size();
}

inline bool is_rotation(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  std::string doubled;
  doubled.reserve(2 * a.size());
  doubled.append(a).append(a);
  return doubled.find(b) != std::string::npos;
}

inline bool commutes(std::string_view a, std::string_view b) {
  if (a.size() + b.size() == 0) return true;
  std::string ab, ba;
  ab.append(a).append(b);
  ba.append(b).append(a);
  return ab == ba;
}

// True iff w occurs in the right-infinite word p^omega.
inline bool is_factor_of_power(std::string_view w, std::string_view p) {
  if (w.empty()) return true;
  if (p.empty()) return false;
  std::string pw;
  const std::size_t copies = w.size() / p.size() + 2;
  pw.reserve(copies * p.size());
  for (std::size_t t = 0; t < copies; ++t) pw.append(p);
  return pw.find(w) != std::string::npos;
}

}  // namespace detail

/// u ∧ v: the longest common prefix.
inline Word longest_common_prefix(const Word& u, const Word& v) {
  return u.prefix(detail::lcp_length(u.view(), v.view()));
}

/// The longest common suffix.
inline Word longest_common_suffix(const Word& u, const Word& v) {
  return u.suffix(detail::lcs_length(u.view(), v.view()));
}

/// The shortest p with w = p^n, computed from the border table of w.
inline Word primitive_root(const Word& w) {
  if (w.empty()) throw precondition_error("empty word has no primitive root");
  return w.prefix(detail::root_length(w.view()));
}

inline bool is_primitive(const Word& w) {
  if (w.empty()) throw precondition_error("empty word has no primitive root");
  return detail::root_length(w.view()) == w.size();
}

/// uv = vu. The empty word commutes with everything.
inline bool commutes(const Word& u, const Word& v) { return detail::commutes(u.view(), v.view()); }

/// u = αβ and v = βα for some α, β.
inline bool are_conjugate(const Word& u, const Word& v) {
  return detail::is_rotation(u.view(), v.view());
}

inline bool is_factor(const Word& w, const Word& text) {
  return text.view().find(w.view()) != std::string_view::npos;
}

inline bool is_factor_of_power(const Word& w, const Word& p) {
  return detail::is_factor_of_power(w.view(), p.view());
}

/// Length of the longest common factor of p^omega and q^omega, capped at
/// `cap`. Every factor of p^omega starts at some offset modulo |p|, so it is
/// enough to compare the aligned infinite words for all offset pairs.
inline std::size_t longest_common_factor_of_powers(const Word& p, const Word& q, std::size_t cap) {
  if (p.empty() || q.empty()) return 0;
  std::size_t best = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < q.size(); ++b) {
      std::size_t t = 0;
      while (t < cap && p[(a + t) % p.size()] == q[(b + t) % q.size()]) ++t;
      best = std::max(best, t);
      if (best >= cap) return cap;
    }
  }
  return best;
}

/// Describes a solution of uz = zv:
///   u = (στ)^m,  z = (στ)^ℓ σ,  v = (τσ)^m,  with στ primitive.
struct ConjugacyDecomposition {
  Word sigma;
  Word tau;
  std::size_t ell = 0;
  std::size_t m = 1;

  Word u() const { return power(sigma + tau, m); }
  Word z() const { return power(sigma + tau, ell) + sigma; }
  Word v() const { return power(tau + sigma, m); }

  friend bool operator==(const ConjugacyDecomposition&, const ConjugacyDecomposition&) = default;
};

/// Canonical decomposition of uz = zv with στ = primitive_root(u).
///
/// z is a prefix of u^omega, so z = p^n s with s a proper prefix of p. If s
/// is non-empty then σ = s; if z is a non-empty power of p then σ = p and τ is
/// empty; if z is empty then σ is empty and τ = p.
inline ConjugacyDecomposition transfer_decomposition(const Word& u, const Word& z, const Word& v) {
  if (u.empty() || u + z != z + v) throw precondition_error("not a transfer relation");
  const Word p = primitive_root(u);
  ConjugacyDecomposition d;
  d.m = u.size() / p.size();
  const std::size_t rem = z.size() % p.size();
  if (z.empty()) {
    d.tau = p;
  } else if (rem == 0) {
    d.sigma = p;
    d.ell = z.size() / p.size() - 1;
  } else {
    d.sigma = p.prefix(rem);
    d.tau = p.suffix(p.size() - rem);
    d.ell = z.size() / p.size();
  }
  return d;
}

/// True iff w is a factor of both p^omega and q^omega and is long enough to
/// trigger the periodicity bound |w| >= |p| + |q| - 1.
inline bool periodicity_lemma_check(const Word& p, const Word& q, const Word& w) {
  if (p.empty() || q.empty() || !is_primitive(p) || !is_primitive(q)) {
    throw precondition_error("periodicity check requires primitive p and q");
  }
  return w.size() + 1 >= p.size() + q.size() && is_factor_of_power(w, p) && is_factor_of_power(w, q);
}

}  // namespace wordeq
