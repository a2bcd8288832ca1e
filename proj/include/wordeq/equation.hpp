#pragma once

// Bounded exhaustive solver for x^i y^j x^k = u^i v^j u^k.
//
// The search budget is the length of the common value w = x^i y^j x^k. For
// each candidate (x, y) the value w is built once and every admissible |u|
// fixes u and v as factors of w, so v is never enumerated freely.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "wordeq/core.hpp"
#include "wordeq/enumerate.hpp"
#include "wordeq/word.hpp"

namespace wordeq {

struct Exponents {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  Exponents() = default;
  Exponents(std::size_t i_, std::size_t j_, std::size_t k_) : i(i_), j(j_), k(k_) {
    if (i + j + k == 0) throw precondition_error("at least one exponent must be positive");
  }

  std::size_t sum() const noexcept { return i + j + k; }
  Exponents mirrored() const { return Exponents(k, j, i); }

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// A candidate quadruple for x^i y^j x^k = u^i v^j u^k. It need not be a
/// solution; use `solution` to build one that is checked.
struct EquationInstance {
  Exponents exps;
  Word x, y, u, v;

  Word lhs() const { return power(x, exps.i) + power(y, exps.j) + power(x, exps.k); }
  Word rhs() const { return power(u, exps.i) + power(v, exps.j) + power(u, exps.k); }

  static EquationInstance solution(Exponents e, Word x, Word y, Word u, Word v);

  friend bool operator==(const EquationInstance&, const EquationInstance&) = default;
};

namespace detail {

inline bool is_power_run(std::string_view w, std::size_t start, std::string_view base, std::size_t times) {
  if (base.empty()) return true;
  for (std::size_t t = 0; t < times * base.size(); ++t) {
    if (w[start + t] != base[t % base.size()]) return false;
  }
  return true;
}

// w = u^i v^j u^k, compared in place.
inline bool matches_rhs(std::string_view w, std::string_view u, std::string_view v, const Exponents& e) {
  if ((e.i + e.k) * u.size() + e.j * v.size() != w.size()) return false;
  const std::size_t mid = e.i * u.size();
  const std::size_t tail = mid + e.j * v.size();
  return is_power_run(w, 0, u, e.i) && is_power_run(w, mid, v, e.j) && is_power_run(w, tail, u, e.k);
}

}  // namespace detail

/// Letter-for-letter equality of both sides.
inline bool check(const EquationInstance& inst) {
  const Word w = inst.lhs();
  return detail::matches_rhs(w.view(), inst.u.view(), inst.v.view(), inst.exps);
}

inline EquationInstance EquationInstance::solution(Exponents e, Word x, Word y, Word u, Word v) {
  EquationInstance inst{e, std::move(x), std::move(y), std::move(u), std::move(v)};
  if (!check(inst)) throw precondition_error("quadruple does not satisfy the equation");
  return inst;
}

namespace detail {

inline bool has_common_root(const EquationInstance& inst) {
  std::optional<Word> root;
  for (const Word* w : {&inst.x, &inst.y, &inst.u, &inst.v}) {
    if (w->empty()) continue;
    Word r = primitive_root(*w);
    if (!root) {
      root = std::move(r);
    } else if (*root != r) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// All non-empty members of {x, y, u, v} share one primitive root.
inline bool is_periodic_solution(const EquationInstance& inst) {
  if (!check(inst)) throw precondition_error("not a solution of the equation");
  return detail::has_common_root(inst);
}

/// Reverse every word and swap i with k. Maps solutions of (i, j, k) onto
/// solutions of (k, j, i).
inline EquationInstance mirror(const EquationInstance& inst) {
  return {inst.exps.mirrored(), inst.x.reversed(), inst.y.reversed(), inst.u.reversed(), inst.v.reversed()};
}

/// Exchange the roles of (x, y) and (u, v).
inline EquationInstance swap_sides(const EquationInstance& inst) {
  return {inst.exps, inst.u, inst.v, inst.x, inst.y};
}

/// Order used for canonical representatives: lexicographic on (x, y, u, v).
inline bool instance_less(const EquationInstance& a, const EquationInstance& b) {
  return std::tie(a.x, a.y, a.u, a.v) < std::tie(b.x, b.y, b.u, b.v);
}

/// Relabels letters in order of first occurrence across x, y, u, v. This is
/// the lexicographically least image of the instance under letter renaming.
inline EquationInstance normalize_letters(const EquationInstance& inst) {
  std::array<char, kMaxAlphabet> map{};
  char next = 'a';
  const auto relabel = [&](const Word& w) {
    std::string out(w.view());
    for (char& c : out) {
      char& m = map[static_cast<std::size_t>(c - 'a')];
      if (m == 0) m = next++;
      c = m;
    }
    return Word::from_trusted(std::move(out));
  };
  EquationInstance out{inst.exps, {}, {}, {}, {}};
  out.x = relabel(inst.x);
  out.y = relabel(inst.y);
  out.u = relabel(inst.u);
  out.v = relabel(inst.v);
  return out;
}

/// Least member of the symmetry orbit: letter renamings, the side swap, and
/// (when i = k, so the equation maps to itself) the mirror.
inline EquationInstance canonical_representative(const EquationInstance& inst) {
  std::vector<EquationInstance> orbit{inst, swap_sides(inst)};
  if (inst.exps.i == inst.exps.k) {
    orbit.push_back(mirror(inst));
    orbit.push_back(swap_sides(mirror(inst)));
  }
  EquationInstance best = normalize_letters(orbit.front());
  for (std::size_t t = 1; t < orbit.size(); ++t) {
    EquationInstance cand = normalize_letters(orbit[t]);
    if (instance_less(cand, best)) best = std::move(cand);
  }
  return best;
}

struct SearchOptions {
  Alphabet alphabet{2};
  std::size_t max_total_len = 0;
  bool distinct_only = false;
  // Admit empty x, y, u, v. The default search requires all four non-empty.
  bool allow_empty = false;
  unsigned shards = 1;
  // Keep every raw solution in SolutionReport::raw, in deterministic order.
  bool collect_raw = false;
};

struct SolutionReport {
  Exponents exps;
  std::size_t bound = 0;
  int alphabet_size = 2;
  std::uint64_t total_solutions = 0;
  // Canonical representatives of the non-periodic solutions with
  // (x, y) != (u, v), sorted. Trivial solutions are counted but never listed.
  std::vector<EquationInstance> nonperiodic;
  bool periodic_only = true;
  std::vector<EquationInstance> raw;  // only filled when collect_raw is set
};

namespace detail {

// One unit of the search: all (x, y) with |x| = xlen, |y| = ylen and x
// starting with `first` (ignored when xlen = 0).
struct SearchShard {
  std::size_t xlen;
  std::size_t ylen;
  char first;
};

struct ShardResult {
  std::uint64_t count = 0;
  std::vector<EquationInstance> nonperiodic;
  std::vector<EquationInstance> raw;
};

inline void validate_search(const Exponents& e, const SearchOptions& opt) {
  if (e.j == 0 || e.i + e.k == 0) {
    throw precondition_error("search needs j >= 1 and i + k >= 1 so that every unknown is bounded");
  }
  if (!opt.allow_empty && opt.max_total_len < e.sum()) {
    throw precondition_error("bound " + std::to_string(opt.max_total_len) +
                             " is below i + j + k = " + std::to_string(e.sum()));
  }
}

inline std::vector<SearchShard> plan_shards(const Exponents& e, const SearchOptions& opt) {
  const std::size_t min_len = opt.allow_empty ? 0 : 1;
  const std::size_t xweight = e.i + e.k;
  std::vector<SearchShard> shards;
  for (std::size_t xlen = min_len; xweight * xlen + e.j * min_len <= opt.max_total_len; ++xlen) {
    for (std::size_t ylen = min_len; xweight * xlen + e.j * ylen <= opt.max_total_len; ++ylen) {
      if (xlen == 0) {
        shards.push_back({xlen, ylen, 0});
        continue;
      }
      for (int c = 0; c < opt.alphabet.size(); ++c) shards.push_back({xlen, ylen, opt.alphabet.letter(c)});
    }
  }
  return shards;
}

inline ShardResult run_shard(const SearchShard& shard, const Exponents& e, const SearchOptions& opt) {
  ShardResult result;
  const std::string letters = alphabet_letters(opt.alphabet);
  const std::size_t min_len = opt.allow_empty ? 0 : 1;
  const std::size_t xweight = e.i + e.k;
  const std::size_t rest = shard.xlen == 0 ? 0 : shard.xlen - 1;
  std::string x, w;

  for_each_sequence(letters, rest, [&](std::string_view xtail) {
    x.clear();
    if (shard.xlen > 0) x += shard.first;
    x.append(xtail);
    for_each_sequence(letters, shard.ylen, [&](std::string_view y) {
      w.clear();
      for (std::size_t t = 0; t < e.i; ++t) w += x;
      for (std::size_t t = 0; t < e.j; ++t) w.append(y);
      for (std::size_t t = 0; t < e.k; ++t) w += x;
      const std::string_view wv(w);
      const std::size_t total = w.size();

      for (std::size_t ulen = min_len; xweight * ulen + e.j * min_len <= total; ++ulen) {
        const std::size_t rem = total - xweight * ulen;
        if (rem % e.j != 0) continue;
        const std::size_t vlen = rem / e.j;
        const std::string_view u = e.i > 0 ? wv.substr(0, ulen) : wv.substr(total - ulen);
        const std::string_view v = wv.substr(e.i * ulen, vlen);
        const bool trivial = u == x && v == y;
        if (opt.distinct_only && trivial) continue;
        if (!matches_rhs(wv, u, v, e)) continue;

        ++result.count;
        EquationInstance inst{e, Word::from_trusted(x), Word::from_trusted(std::string(y)),
                              Word::from_trusted(std::string(u)), Word::from_trusted(std::string(v))};
        if (!trivial && !has_common_root(inst)) result.nonperiodic.push_back(canonical_representative(inst));
        if (opt.collect_raw) result.raw.push_back(std::move(inst));
      }
    });
  });
  return result;
}

inline void sort_unique(std::vector<EquationInstance>& items) {
  std::sort(items.begin(), items.end(), instance_less);
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

}  // namespace detail

/// Visits every solution with |x^i y^j x^k| <= max_total_len. Shards run on
/// `opt.shards` threads; the report does not depend on the shard count.
inline SolutionReport enumerate_solutions(const Exponents& exps, const SearchOptions& opt) {
  detail::validate_search(exps, opt);
  const auto shards = detail::plan_shards(exps, opt);
  std::vector<detail::ShardResult> results(shards.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t s = next++; s < shards.size(); s = next++) {
      results[s] = detail::run_shard(shards[s], exps, opt);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.shards, static_cast<unsigned>(shards.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SolutionReport report;
  report.exps = exps;
  report.bound = opt.max_total_len;
  report.alphabet_size = opt.alphabet.size();
  for (auto& r : results) {
    report.total_solutions += r.count;
    report.nonperiodic.insert(report.nonperiodic.end(), std::make_move_iterator(r.nonperiodic.begin()),
                              std::make_move_iterator(r.nonperiodic.end()));
    report.raw.insert(report.raw.end(), std::make_move_iterator(r.raw.begin()),
                      std::make_move_iterator(r.raw.end()));
  }
  detail::sort_unique(report.nonperiodic);
  report.periodic_only = report.nonperiodic.empty();
  return report;
}

struct ForcingVerdict {
  bool forced_up_to_bound = true;
  std::vector<EquationInstance> witnesses;
  SolutionReport report;
};

/// Does w = a^i b^j a^k force periodicity up to the bound? (x, y) and (u, v)
/// are read as the images of a and b under two morphisms agreeing on w.
inline ForcingVerdict forcing_verdict(const Exponents& exps, const Alphabet& alphabet, std::size_t max_total_len,
                                      unsigned shards = 1) {
  SearchOptions opt;
  opt.alphabet = alphabet;
  opt.max_total_len = max_total_len;
  opt.distinct_only = true;
  opt.shards = shards;
  ForcingVerdict verdict;
  verdict.report = enumerate_solutions(exps, opt);
  verdict.forced_up_to_bound = verdict.report.periodic_only;
  verdict.witnesses = verdict.report.nonperiodic;
  return verdict;
}

struct WordEquation {
  Word lhs;
  Word rhs;
  bool holds() const { return lhs == rhs; }
};

/// For i = k and even j the equation is equivalent to the pair
///   x^i y^(j/2) = u^i v^(j/2)   and   y^(j/2) x^i = v^(j/2) u^i,
/// because both sides of each half have length |w| / 2 once |w| agrees.
inline std::optional<std::pair<WordEquation, WordEquation>> split_even_j(const EquationInstance& inst) {
  const Exponents& e = inst.exps;
  if (e.i != e.k || e.j % 2 != 0) return std::nullopt;
  const std::size_t h = e.j / 2;
  WordEquation first{power(inst.x, e.i) + power(inst.y, h), power(inst.u, e.i) + power(inst.v, h)};
  WordEquation second{power(inst.y, h) + power(inst.x, e.i), power(inst.v, h) + power(inst.u, e.i)};
  return std::make_pair(std::move(first), std::move(second));
}

/// Searches x^i y^2 x^k = u^i v^2 u^k for |i - k| >= 2, ik != 0, where only
/// periodic solutions are expected. Any non-periodic entry is a counterexample.
inline SolutionReport conjecture_scan(const Exponents& exps, SearchOptions opt) {
  const std::size_t gap = exps.i > exps.k ? exps.i - exps.k : exps.k - exps.i;
  if (exps.j != 2 || gap < 2 || exps.i == 0 || exps.k == 0) {
    throw precondition_error("conjecture scan needs j = 2, |i - k| >= 2 and i, k > 0");
  }
  opt.distinct_only = true;
  return enumerate_solutions(exps, opt);
}

}  // namespace wordeq
