#pragma once

// Closed-form non-periodic solutions just outside the forcing region:
//   j = 2, i = k + 1:  x = α^(2k+1) (βα^k)^2,  y = βα^k,
//                      u = α,  v = (α^k β)^2 (α^(3k+1) β α^k β)^k
//   i = k = 1, odd j:  x = α β α,  y = γ,  u = α,  v = α γ^j α,
//                      with β = v^((j-1)/2) so that β^2 = v^(j-1).

#include <cstddef>
#include <string>
#include <vector>

#include "wordeq/core.hpp"
#include "wordeq/enumerate.hpp"
#include "wordeq/equation.hpp"
#include "wordeq/word.hpp"

namespace wordeq {

struct FamilyJ2Params {
  Word alpha;
  Word beta;
  std::size_t k = 1;
};

struct FamilyI1K1Params {
  Word alpha;
  Word gamma;
  std::size_t j = 3;
};

namespace detail {

inline EquationInstance checked_family_instance(EquationInstance inst) {
  if (!check(inst)) {
    throw invariant_violation("family instance x=" + inst.x.str() + " y=" + inst.y.str() + " u=" + inst.u.str() +
                              " v=" + inst.v.str() + " is not a solution");
  }
  return inst;
}

}  // namespace detail

inline EquationInstance family_j2(const FamilyJ2Params& p) {
  if (p.alpha.empty() || p.beta.empty()) throw precondition_error("alpha and beta must be non-empty");
  if (commutes(p.alpha, p.beta)) throw precondition_error("alpha and beta commute");
  if (p.k < 1) throw precondition_error("family parameter k must be at least 1");
  const std::size_t k = p.k;
  const Word ak = power(p.alpha, k);
  const Word y = p.beta + ak;
  const Word x = power(p.alpha, 2 * k + 1) + power(y, 2);
  const Word v = power(ak + p.beta, 2) + power(power(p.alpha, 3 * k + 1) + p.beta + ak + p.beta, k);
  return detail::checked_family_instance({Exponents(k + 1, 2, k), x, y, p.alpha, v});
}

inline EquationInstance family_i1k1(const FamilyI1K1Params& p) {
  if (p.j < 3 || p.j % 2 == 0) {
    throw precondition_error("closed form needs odd j >= 3 (beta^2 = v^(j-1) has no canonical root otherwise)");
  }
  if (p.alpha.empty() || p.gamma.empty()) throw precondition_error("alpha and gamma must be non-empty");
  if (commutes(p.alpha, p.gamma)) throw precondition_error("alpha and gamma commute");
  const Word v = p.alpha + power(p.gamma, p.j) + p.alpha;
  const Word beta = power(v, (p.j - 1) / 2);
  return detail::checked_family_instance({Exponents(1, p.j, 1), p.alpha + beta + p.alpha, p.gamma, p.alpha, v});
}

struct FamilyGridSummary {
  std::size_t parameter_pairs = 0;  // ordered non-commuting pairs
  std::size_t j2_instances = 0;
  std::size_t i1k1_instances = 0;

  std::size_t total() const noexcept { return j2_instances + i1k1_instances; }
};

/// Runs both generators over every ordered non-commuting pair of words with
/// lengths <= max_param_len, every k <= max_k and every odd 3 <= j <= max_j.
/// Every instance must be a non-periodic solution; the first one that is not
/// raises invariant_violation naming its parameters.
inline FamilyGridSummary validate_family_grid(std::size_t max_param_len, std::size_t max_k, std::size_t max_j,
                                              const Alphabet& alphabet = Alphabet(2)) {
  if (max_param_len < 1 || max_k < 1 || max_j < 1) throw precondition_error("grid bounds must be at least 1");
  FamilyGridSummary summary;
  const auto words = words_up_to(alphabet, max_param_len);
  const auto require = [](const EquationInstance& inst, const std::string& what) {
    if (!check(inst) || is_periodic_solution(inst)) throw invariant_violation("family instance failed: " + what);
  };
  for (const Word& a : words) {
    for (const Word& b : words) {
      if (commutes(a, b)) continue;
      ++summary.parameter_pairs;
      for (std::size_t k = 1; k <= max_k; ++k) {
        require(family_j2({a, b, k}), "j2 alpha=" + a.str() + " beta=" + b.str() + " k=" + std::to_string(k));
        ++summary.j2_instances;
      }
      for (std::size_t j = 3; j <= max_j; j += 2) {
        require(family_i1k1({a, b, j}),
                "i1k1 alpha=" + a.str() + " gamma=" + b.str() + " j=" + std::to_string(j));
        ++summary.i1k1_instances;
      }
    }
  }
  return summary;
}

}  // namespace wordeq
