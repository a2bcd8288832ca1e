#pragma once

// Bounded exhaustive checks of the structural facts the equation engine and
// the proofs around it lean on. Each check enumerates every hypothesis
// instance in its range and tests the conclusion directly, so a pass means
// the statement holds restricted to that range.
//
// Ranges are expressed relative to a single size knob `max_len` (N); the
// defaults below are the ranges at N = 6.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "wordeq/code.hpp"
#include "wordeq/core.hpp"
#include "wordeq/enumerate.hpp"
#include "wordeq/word.hpp"

namespace wordeq {

struct LemmaRanges {
  std::size_t periodic_len;       // |p|, |q|                      (5)
  std::size_t code_pair_sum;      // |x| + |y| for common prefix   (8)
  std::size_t code_letters;       // code letters in α, β          (4)
  std::size_t border_len;         // |s|                           (10)
  std::size_t transfer_u;         // |u|                           (5)
  std::size_t transfer_z;         // |z|                           (7)
  std::size_t code_word_len;      // |x|, |y| for code lemmas      (4)
  std::size_t cross_exp;          // exponents in the cross set    (6)
  std::size_t code_len;           // code length for X-primitive   (5)
  std::size_t power_base_len;     // |v|, |z|, |t| in power lemmas (5)
  std::size_t power_exp;          // i in v^i                      (4)

  static LemmaRanges for_max_len(std::size_t n) {
    if (n < 1) throw precondition_error("lemma range must be at least 1");
    const auto at_least = [](std::size_t floor, std::size_t value, std::size_t minus) {
      return value > minus + floor ? value - minus : floor;
    };
    LemmaRanges r{};
    r.periodic_len = at_least(1, n, 1);
    r.code_pair_sum = n + 2;
    r.code_letters = 4;
    r.border_len = n + 4;
    r.transfer_u = at_least(1, n, 1);
    r.transfer_z = n + 1;
    r.code_word_len = at_least(1, n, 2);
    r.cross_exp = n;
    r.code_len = at_least(2, n, 1);
    r.power_base_len = at_least(1, n, 1);
    r.power_exp = 4;
    return r;
  }
};

struct LemmaOutcome {
  std::string name;
  std::string statement;
  std::string range;
  std::uint64_t cases = 0;
  bool passed = true;
  std::string counterexample;
};

namespace detail {

// Counts cases and keeps the first failure.
class LemmaTally {
 public:
  LemmaTally(std::string name, std::string statement, std::string range) {
    out_.name = std::move(name);
    out_.statement = std::move(statement);
    out_.range = std::move(range);
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++out_.cases;
    if (!ok && out_.passed) {
      out_.passed = false;
      out_.counterexample = describe();
    }
  }

  void fail(std::string what) {
    if (out_.passed) {
      out_.passed = false;
      out_.counterexample = std::move(what);
    }
  }

  LemmaOutcome finish() { return std::move(out_); }

 private:
  LemmaOutcome out_;
};

inline bool in_root_powers(std::string_view w, std::string_view root) {
  if (root.empty()) return w.empty();
  if (w.size() % root.size() != 0) return false;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] != root[t % root.size()]) return false;
  }
  return true;
}

inline std::vector<Word> primitive_words(const Alphabet& a, std::size_t max_len) {
  std::vector<Word> out;
  for (auto& w : words_up_to(a, max_len)) {
    if (is_primitive(w)) out.push_back(std::move(w));
  }
  return out;
}

template <class Fn>
void for_each_code(const Alphabet& a, std::size_t max_each, Fn&& fn) {
  const auto words = words_up_to(a, max_each);
  for (const Word& x : words) {
    for (const Word& y : words) {
      if (!commutes(x, y)) fn(BinaryCode(x, y));
    }
  }
}

inline std::string code_str(const BinaryCode& c) { return "x=" + c.x().str() + " y=" + c.y().str(); }

inline std::string lens(std::initializer_list<std::pair<const char*, std::size_t>> items) {
  std::string out;
  for (const auto& [label, n] : items) {
    if (!out.empty()) out += ", ";
    out += label;
    out += " <= " + std::to_string(n);
  }
  return out;
}

}  // namespace detail

namespace lemma {

/// Two primitive words whose infinite powers share a factor of length
/// |p| + |q| - 1 are conjugate, and equal when the shared factor is a common
/// prefix. The bound is sharp: for coprime lengths some non-conjugate pair
/// shares a factor of length |p| + |q| - 2.
inline LemmaOutcome periodicity(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("periodicity", "common factor of p^w, q^w of length |p|+|q|-1 => p, q conjugate",
                       detail::lens({{"|p|,|q|", r.periodic_len}}));
  const auto prim = detail::primitive_words(a, r.periodic_len);
  // best[m][n]: longest common factor over non-conjugate pairs with those lengths
  std::vector<std::vector<std::size_t>> best(r.periodic_len + 1, std::vector<std::size_t>(r.periodic_len + 1, 0));
  for (const Word& p : prim) {
    for (const Word& q : prim) {
      const std::size_t bound = p.size() + q.size() - 1;
      const std::size_t common = longest_common_factor_of_powers(p, q, bound);
      const bool conj = are_conjugate(p, q);
      t.expect(common < bound || conj, [&] { return "p=" + p.str() + " q=" + q.str() + " not conjugate"; });
      if (!conj) best[p.size()][q.size()] = std::max(best[p.size()][q.size()], common);

      std::size_t prefix = 0;
      while (prefix < bound && p[prefix % p.size()] == q[prefix % q.size()]) ++prefix;
      t.expect(prefix < bound || p == q, [&] { return "p=" + p.str() + " q=" + q.str() + " prefix-comparable"; });
    }
  }
  for (std::size_t m = 1; m <= r.periodic_len; ++m) {
    for (std::size_t n = 1; n <= r.periodic_len; ++n) {
      if (std::gcd(m, n) != 1) continue;
      t.expect(best[m][n] == m + n - 2, [&] {
        return "no pair with |p|=" + std::to_string(m) + " |q|=" + std::to_string(n) + " reaches " +
               std::to_string(m + n - 2) + " (best " + std::to_string(best[m][n]) + ")";
      });
    }
  }
  return t.finish();
}

/// α ∈ xX*, β ∈ yX* with |α ∧ β| >= |x| + |y| forces x, y to commute; for a
/// code the common prefix is therefore shorter than |x| + |y|. With
/// `suffix` set the mirror statement for α ∈ X*x, β ∈ X*y.
inline LemmaOutcome common_affix_bound(const LemmaRanges& r, const Alphabet& a, bool suffix) {
  detail::LemmaTally t(suffix ? "suffix-bound" : "prefix-bound",
                       suffix ? "a in X*x, b in X*y => |a ^s b| < |x|+|y|" : "a in xX*, b in yX* => |a ^ b| < |x|+|y|",
                       detail::lens({{"|x|+|y|", r.code_pair_sum}, {"code letters", r.code_letters}}));
  std::vector<CodeWord> xs, ys;
  for (std::size_t n = 1; n <= r.code_letters; ++n) {
    for_each_sequence("xy", n, [&](std::string_view s) {
      const char anchor = suffix ? s.back() : s.front();
      (anchor == 'x' ? xs : ys).emplace_back(s);
    });
  }
  detail::for_each_code(a, r.code_pair_sum - 1, [&](const BinaryCode& code) {
    const std::size_t limit = code.x().size() + code.y().size();
    if (limit > r.code_pair_sum) return;
    std::vector<Word> ax, ay;
    for (const auto& c : xs) ax.push_back(code.expand(c));
    for (const auto& c : ys) ay.push_back(code.expand(c));
    for (std::size_t s = 0; s < ax.size(); ++s) {
      for (std::size_t q = 0; q < ay.size(); ++q) {
        const std::size_t common =
            suffix ? longest_common_suffix(ax[s], ay[q]).size() : longest_common_prefix(ax[s], ay[q]).size();
        t.expect(common < limit, [&] {
          return detail::code_str(code) + " alpha=" + std::string(xs[s].letters()) + " beta=" +
                 std::string(ys[q].letters());
        });
      }
    }
  });
  return t.finish();
}

/// s = s1 s2 with s1 a suffix and s2 a prefix of s gives s = s2 s1.
inline LemmaOutcome border_commutation(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("border-commutation", "s = s1 s2, s1 suffix of s, s2 prefix of s => s1 s2 = s2 s1",
                       detail::lens({{"|s|", r.border_len}}));
  for (const Word& s : words_up_to(a, r.border_len, 0)) {
    for (std::size_t cut = 0; cut <= s.size(); ++cut) {
      const Word s1 = s.prefix(cut);
      const Word s2 = s.suffix(s.size() - cut);
      if (!s.ends_with(s1) || !s.starts_with(s2)) continue;
      t.expect(commutes(s1, s2), [&] { return "s1=" + s1.str() + " s2=" + s2.str(); });
    }
  }
  return t.finish();
}

/// uz = zv: u, v conjugate and the canonical (σ, τ, ℓ, m) rebuilds all three.
inline LemmaOutcome conjugacy_transfer(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("conjugacy-transfer",
                       "uz = zv => u = (st)^m, z = (st)^l s, v = (ts)^m with st primitive",
                       detail::lens({{"|u|", r.transfer_u}, {"|z|", r.transfer_z}}));
  const auto us = words_up_to(a, r.transfer_u);
  const auto zs = words_up_to(a, r.transfer_z, 0);
  for (const Word& u : us) {
    for (const Word& z : zs) {
      const Word uz = u + z;
      const Word v = uz.suffix(u.size());
      if (uz != z + v) continue;
      const auto d = transfer_decomposition(u, z, v);
      t.expect(d.u() == u && d.z() == z && d.v() == v && is_primitive(d.sigma + d.tau) && are_conjugate(u, v),
               [&] { return "u=" + u.str() + " z=" + z.str() + " v=" + v.str(); });
    }
  }
  return t.finish();
}

/// xy^+ ∪ x^+y holds at most one imprimitive word when x, y do not commute.
inline LemmaOutcome cross_set(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("cross-set", "x, y non-commuting => at most one imprimitive word in xy+ u x+y",
                       detail::lens({{"|x|,|y|", r.code_word_len}, {"exponent", r.cross_exp}}));
  detail::for_each_code(a, r.code_word_len, [&](const BinaryCode& code) {
    const auto found = imprimitive_in_cross_set(code, r.cross_exp);
    t.expect(found.size() <= 1, [&] {
      std::string s = detail::code_str(code) + ":";
      for (const auto& c : found) s += " " + std::string(c.letters());
      return s;
    });
  });
  return t.finish();
}

inline std::vector<CodeWord> x_primitive_imprimitive_members(const BinaryCode& code, std::size_t max_code_len) {
  std::vector<CodeWord> out;
  for (std::size_t n = 2; n <= max_code_len; ++n) {
    for_each_sequence("xy", n, [&](std::string_view s) {
      CodeWord c(s);
      if (is_x_primitive(c) && !is_primitive(code.expand(c))) out.push_back(c);
    });
  }
  return out;
}

/// An X-primitive imprimitive word is X-conjugate to a word of x*y ∪ y*x;
/// outside {x, y} it also forces the primitive roots of x, y apart.
inline LemmaOutcome x_conjugate_form(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("x-conjugate-form",
                       "X-primitive, imprimitive w => w X-conjugate into x*y u y*x; roots of x, y not conjugate",
                       detail::lens({{"|x|,|y|", r.code_word_len}, {"code length", r.code_len}}));
  detail::for_each_code(a, r.code_word_len, [&](const BinaryCode& code) {
    for (const CodeWord& c : x_primitive_imprimitive_members(code, r.code_len)) {
      const std::size_t n = c.size();
      const bool form = are_x_conjugate(c, repeat(CodeLetter::x, n - 1) + repeat(CodeLetter::y, 1)) ||
                        are_x_conjugate(c, repeat(CodeLetter::y, n - 1) + repeat(CodeLetter::x, 1));
      t.expect(form, [&] { return detail::code_str(code) + " w=" + std::string(c.letters()); });
      t.expect(!are_conjugate(primitive_root(code.x()), primitive_root(code.y())),
               [&] { return detail::code_str(code) + " w=" + std::string(c.letters()) + " (roots conjugate)"; });
    }
  });
  return t.finish();
}

/// The X-primitive imprimitive words of X^+ \ X are either none or all
/// rotations of one x^k y (or y^k x).
inline LemmaOutcome imprimitive_set_shape(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("imprimitive-set-shape", "set is empty, {x^i y x^(k-i)} or {y^i x y^(k-i)}",
                       detail::lens({{"|x|,|y|", r.code_word_len}, {"code length", r.code_len}}));
  detail::for_each_code(a, r.code_word_len, [&](const BinaryCode& code) {
    try {
      const auto set = x_primitive_imprimitive_set(code, r.code_len);
      t.expect(set.satisfies_shape(), [&] { return detail::code_str(code); });
    } catch (const invariant_violation& e) {
      t.fail(e.what());
    }
  });
  return t.finish();
}

/// An X-primitive word equal to z^i, i >= 2, is x^k y x^l or y^k x y^l.
inline LemmaOutcome x_primitive_powers(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("x-primitive-powers", "X-primitive a = z^i, i >= 2 => a = x^k y x^l or y^k x y^l",
                       detail::lens({{"|x|,|y|", r.code_word_len}, {"code length", r.code_len}}));
  detail::for_each_code(a, r.code_word_len, [&](const BinaryCode& code) {
    for (std::size_t n = 1; n <= r.code_len; ++n) {
      for_each_sequence("xy", n, [&](std::string_view s) {
        const CodeWord c(s);
        if (!is_x_primitive(c)) return;
        const Word w = code.expand(c);
        for (std::size_t e = 2; e <= w.size(); ++e) {
          if (w.size() % e != 0 || power(w.prefix(w.size() / e), e) != w) continue;
          const auto where = [&] { return detail::code_str(code) + " a=" + std::string(s) + " i=" + std::to_string(e); };
          try {
            const auto shape = classify_x_power(code, c, e);
            t.expect(shape.letters() == c, where);
          } catch (const std::exception&) {
            t.fail(where());
          }
        }
      });
    }
  });
  return t.finish();
}

/// z suffix of v and uv a prefix of z v^i => uv ∈ z p_v^*.
inline LemmaOutcome power_prefix_root(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("power-prefix-root", "z suffix of v, uv prefix of z v^i => uv in z p_v*",
                       detail::lens({{"|v|", r.power_base_len}, {"i", r.power_exp}}));
  for (const Word& v : words_up_to(a, r.power_base_len)) {
    const Word root = primitive_root(v);
    for (std::size_t i = 1; i <= r.power_exp; ++i) {
      for (std::size_t zl = 0; zl <= v.size(); ++zl) {
        const Word z = v.suffix(zl);
        const Word text = z + power(v, i);
        for (std::size_t n = v.size(); n <= text.size(); ++n) {
          const Word uv = text.prefix(n);
          if (!uv.ends_with(v)) continue;
          const bool ok = uv.starts_with(z) && detail::in_root_powers(uv.view().substr(z.size()), root.view());
          t.expect(ok, [&] { return "u=" + uv.prefix(n - v.size()).str() + " v=" + v.str() + " z=" + z.str(); });
        }
      }
    }
  }
  return t.finish();
}

/// |t| <= |w| and wv a prefix of t v^i => w ∈ t p_v^*.
inline LemmaOutcome power_prefix_offset(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("power-prefix-offset", "|t| <= |w|, wv prefix of t v^i => w in t p_v*",
                       detail::lens({{"|v|,|t|", r.power_base_len}, {"i", r.power_exp}}));
  const auto ts = words_up_to(a, r.power_base_len, 0);
  for (const Word& v : words_up_to(a, r.power_base_len)) {
    const Word root = primitive_root(v);
    for (const Word& tw : ts) {
      for (std::size_t i = 1; i <= r.power_exp; ++i) {
        const Word text = tw + power(v, i);
        for (std::size_t wl = tw.size(); wl + v.size() <= text.size(); ++wl) {
          const Word wv = text.prefix(wl + v.size());
          if (!wv.ends_with(v)) continue;
          const Word w = wv.prefix(wl);
          const bool ok = w.starts_with(tw) && detail::in_root_powers(w.view().substr(tw.size()), root.view());
          t.expect(ok, [&] { return "w=" + w.str() + " v=" + v.str() + " t=" + tw.str(); });
        }
      }
    }
  }
  return t.finish();
}

/// |u| >= |v|, αu a prefix and uβ a suffix of v^i => αuβ commutes with v.
inline LemmaOutcome two_sided_power_factor(const LemmaRanges& r, const Alphabet& a) {
  detail::LemmaTally t("two-sided-power-factor", "|u| >= |v|, au prefix, ub suffix of v^i => aub commutes with v",
                       detail::lens({{"|v|", r.power_base_len}, {"i", r.power_exp}}));
  for (const Word& v : words_up_to(a, r.power_base_len)) {
    for (std::size_t i = 1; i <= r.power_exp; ++i) {
      const Word vi = power(v, i);
      for (std::size_t ul = v.size(); ul <= vi.size(); ++ul) {
        for (std::size_t al = 0; al + ul <= vi.size(); ++al) {
          const Word alpha = vi.prefix(al);
          const Word u = vi.substr(al, ul);
          for (std::size_t bl = 0; bl + ul <= vi.size(); ++bl) {
            const Word ub = vi.suffix(ul + bl);
            if (!ub.starts_with(u)) continue;
            const Word beta = ub.suffix(bl);
            t.expect(commutes(alpha + u + beta, v),
                     [&] { return "alpha=" + alpha.str() + " u=" + u.str() + " beta=" + beta.str() + " v=" + v.str(); });
          }
        }
      }
    }
  }
  return t.finish();
}

/// |u| >= |v|, αu and βu prefixes (or uα and uβ suffixes, with `suffix`) of
/// v^i and |α| <= |β| => α is a suffix (prefix) of β and the remainder of β
/// commutes with v.
inline LemmaOutcome power_alignment(const LemmaRanges& r, const Alphabet& a, bool suffix) {
  detail::LemmaTally t(suffix ? "suffix-power-alignment" : "prefix-power-alignment",
                       suffix ? "ua, ub suffixes of v^i, |a| <= |b| => a prefix of b, a^-1 b commutes with v"
                              : "au, bu prefixes of v^i, |a| <= |b| => a suffix of b, b a^-1 commutes with v",
                       detail::lens({{"|v|", r.power_base_len}, {"i", r.power_exp}}));
  for (const Word& v : words_up_to(a, r.power_base_len)) {
    for (std::size_t i = 1; i <= r.power_exp; ++i) {
      const Word vi = power(v, i);
      const std::size_t n = vi.size();
      for (std::size_t ul = v.size(); ul <= n; ++ul) {
        for (std::size_t al = 0; al + ul <= n; ++al) {
          for (std::size_t bl = al; bl + ul <= n; ++bl) {
            Word alpha, beta, rest;
            bool related = false;
            if (suffix) {
              if (vi.substr(n - al - ul, ul) != vi.substr(n - bl - ul, ul)) continue;
              alpha = vi.suffix(al);
              beta = vi.suffix(bl);
              related = beta.starts_with(alpha);
              if (related) rest = beta.suffix(bl - al);
            } else {
              if (vi.substr(al, ul) != vi.substr(bl, ul)) continue;
              alpha = vi.prefix(al);
              beta = vi.prefix(bl);
              related = beta.ends_with(alpha);
              if (related) rest = beta.prefix(bl - al);
            }
            t.expect(related && commutes(rest, v), [&] {
              return "alpha=" + alpha.str() + " beta=" + beta.str() + " |u|=" + std::to_string(ul) + " v=" + v.str();
            });
          }
        }
      }
    }
  }
  return t.finish();
}

}  // namespace lemma

/// Runs every bounded check; outcomes are listed in a fixed order.
inline std::vector<LemmaOutcome> run_lemma_suite(std::size_t max_len, const Alphabet& alphabet = Alphabet(2)) {
  const LemmaRanges r = LemmaRanges::for_max_len(max_len);
  std::vector<LemmaOutcome> out;
  out.push_back(lemma::periodicity(r, alphabet));
  out.push_back(lemma::common_affix_bound(r, alphabet, false));
  out.push_back(lemma::common_affix_bound(r, alphabet, true));
  out.push_back(lemma::border_commutation(r, alphabet));
  out.push_back(lemma::conjugacy_transfer(r, alphabet));
  out.push_back(lemma::cross_set(r, alphabet));
  out.push_back(lemma::x_conjugate_form(r, alphabet));
  out.push_back(lemma::imprimitive_set_shape(r, alphabet));
  out.push_back(lemma::x_primitive_powers(r, alphabet));
  out.push_back(lemma::power_prefix_root(r, alphabet));
  out.push_back(lemma::power_prefix_offset(r, alphabet));
  out.push_back(lemma::two_sided_power_factor(r, alphabet));
  out.push_back(lemma::power_alignment(r, alphabet, false));
  out.push_back(lemma::power_alignment(r, alphabet, true));
  return out;
}

}  // namespace wordeq
