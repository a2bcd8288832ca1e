#pragma once

// Command-line front end. `run` is separate from main so tests can drive the
// exact argument handling and exit codes in-process.
//
// Exit codes: 0 success / forced, 2 non-periodic witnesses found, 3 a bounded
// check failed, 64 usage error, 65 invalid parameters.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "wordeq/wordeq.hpp"

namespace wordeq::cli {

enum ExitCode : int {
  kOk = 0,
  kWitnesses = 2,
  kCheckFailed = 3,
  kUsage = 64,
  kInvalidParams = 65,
};

struct RunConfig {
  std::size_t i = 0, j = 0, k = 0;
  int alphabet = 2;
  std::optional<std::size_t> max_len;
  std::string format = "text";
  unsigned shards = 1;
  bool distinct_only = false;
  std::string family;
  std::string alpha, beta, gamma;
  std::optional<std::size_t> param_k, param_j;
};

inline unsigned default_shards() {
  if (const char* env = std::getenv("WORDEQ_SHARDS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

inline std::string show(const EquationInstance& inst) {
  return "x=" + inst.x.str() + " y=" + inst.y.str() + " u=" + inst.u.str() + " v=" + inst.v.str();
}

inline std::string equation_name(const Exponents& e) {
  return "x^" + std::to_string(e.i) + " y^" + std::to_string(e.j) + " x^" + std::to_string(e.k) + " = u^" +
         std::to_string(e.i) + " v^" + std::to_string(e.j) + " u^" + std::to_string(e.k);
}

inline void print_report_text(std::ostream& out, const SolutionReport& r) {
  out << equation_name(r.exps) << "\n"
      << "  alphabet " << r.alphabet_size << ", |x^i y^j x^k| <= " << r.bound << "\n"
      << "  solutions: " << r.total_solutions << ", non-periodic orbits: " << r.nonperiodic.size() << "\n";
  for (const auto& inst : r.nonperiodic) out << "  " << show(inst) << "\n";
}

inline SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions opt;
  opt.alphabet = Alphabet(cfg.alphabet);
  opt.max_total_len = *cfg.max_len;
  opt.distinct_only = cfg.distinct_only;
  opt.shards = cfg.shards;
  return opt;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Exponents e(cfg.i, cfg.j, cfg.k);
  if (!(e.j >= 3 && e.i + e.k >= 3 && e.i * e.k != 0)) {
    err << "warning: forcing is only claimed for j >= 3, i + k >= 3, ik != 0; running anyway\n";
  }
  const ForcingVerdict v = forcing_verdict(e, Alphabet(cfg.alphabet), *cfg.max_len, cfg.shards);
  if (cfg.format == "json") {
    json j = to_json(v.report);
    j["forced_up_to_bound"] = v.forced_up_to_bound;
    out << j.dump(2) << "\n";
  } else {
    print_report_text(out, v.report);
    out << (v.forced_up_to_bound ? "forced up to bound" : "NOT forced: witnesses listed above") << "\n";
  }
  return v.forced_up_to_bound ? kOk : kWitnesses;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const SolutionReport r = enumerate_solutions(Exponents(cfg.i, cfg.j, cfg.k), search_options(cfg));
  if (cfg.format == "json") {
    out << to_json(r).dump(2) << "\n";
  } else {
    print_report_text(out, r);
    out << (r.periodic_only ? "periodic only" : "non-periodic solutions found") << "\n";
  }
  return kOk;
}

inline int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Alphabet alphabet(cfg.alphabet);
  try {
    if (cfg.family == "j2") {
      FamilyJ2Params p{alphabet.parse(cfg.alpha), alphabet.parse(cfg.beta), cfg.param_k.value_or(1)};
      const auto inst = family_j2(p);
      if (cfg.format == "json") {
        out << family_json(inst, p).dump(2) << "\n";
      } else {
        out << equation_name(inst.exps) << "\n  " << show(inst) << "\n  common value " << inst.lhs() << "\n";
      }
      return kOk;
    }
    if (cfg.family == "i1k1") {
      FamilyI1K1Params p{alphabet.parse(cfg.alpha), alphabet.parse(cfg.gamma), cfg.param_j.value_or(3)};
      const auto inst = family_i1k1(p);
      if (cfg.format == "json") {
        out << family_json(inst, p).dump(2) << "\n";
      } else {
        out << equation_name(inst.exps) << "\n  " << show(inst) << "\n  common value " << inst.lhs() << "\n";
      }
      return kOk;
    }
  } catch (const precondition_error& e) {
    err << "invalid family parameters: " << e.what() << "\n";
    return kInvalidParams;
  }

  // grid
  const std::size_t len = cfg.max_len.value_or(2);
  const std::size_t max_k = cfg.param_k.value_or(2);
  const std::size_t max_j = cfg.param_j.value_or(5);
  FamilyGridSummary s;
  try {
    s = validate_family_grid(len, max_k, max_j, alphabet);
  } catch (const precondition_error& e) {
    err << "invalid grid bounds: " << e.what() << "\n";
    return kInvalidParams;
  } catch (const invariant_violation& e) {
    err << e.what() << "\n";
    return kCheckFailed;
  }
  if (cfg.format == "json") {
    json j{{"max_param_len", len},       {"max_k", max_k},
           {"max_j", max_j},             {"parameter_pairs", s.parameter_pairs},
           {"j2_instances", s.j2_instances}, {"i1k1_instances", s.i1k1_instances},
           {"failures", 0}};
    out << j.dump(2) << "\n";
  } else {
    out << "family grid |alpha|,|beta| <= " << len << ", k <= " << max_k << ", odd j <= " << max_j << "\n"
        << "  parameter pairs: " << s.parameter_pairs << "\n"
        << "  j2 instances: " << s.j2_instances << ", i1k1 instances: " << s.i1k1_instances << ", all valid\n";
  }
  return kOk;
}

inline int cmd_lemmas(const RunConfig& cfg, std::ostream& out) {
  const auto outcomes = run_lemma_suite(cfg.max_len.value_or(6), Alphabet(cfg.alphabet));
  bool ok = true;
  json arr = json::array();
  for (const auto& o : outcomes) {
    ok = ok && o.passed;
    if (cfg.format == "json") {
      arr.push_back(to_json(o));
    } else {
      out << (o.passed ? "PASS " : "FAIL ") << o.name << " [" << o.range << "] " << o.cases << " cases\n";
      if (!o.passed) out << "     counterexample: " << o.counterexample << "\n";
    }
  }
  if (cfg.format == "json") out << json{{"passed", ok}, {"lemmas", std::move(arr)}}.dump(2) << "\n";
  return ok ? kOk : kCheckFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded verifier for x^i y^j x^k = u^i v^j u^k and supporting word combinatorics"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.shards = default_shards();

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alphabet", cfg.alphabet, "alphabet size (2..26)")->check(CLI::Range(2, kMaxAlphabet));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_search = [&](CLI::App* sub) {
    sub->add_option("--i", cfg.i, "exponent i")->required();
    sub->add_option("--j", cfg.j, "exponent j")->required();
    sub->add_option("--k", cfg.k, "exponent k")->required();
    sub->add_option("--max-len", cfg.max_len, "bound on |x^i y^j x^k|")->required();
    sub->add_option("--shards", cfg.shards, "worker threads (default $WORDEQ_SHARDS or all cores)")
        ->check(CLI::PositiveNumber);
    add_common(sub);
  };

  auto* verify = app.add_subcommand("verify", "check that a^i b^j a^k forces periodicity up to the bound");
  add_search(verify);
  auto* solve = app.add_subcommand("solve", "enumerate all solutions up to the bound");
  add_search(solve);
  solve->add_flag("--distinct-only", cfg.distinct_only, "skip the trivial solutions (x, y) = (u, v)");

  auto* family = app.add_subcommand("family", "build or validate the closed-form non-periodic families");
  family->add_option("--family", cfg.family, "j2, i1k1 or grid")
      ->required()
      ->check(CLI::IsMember({"j2", "i1k1", "grid"}));
  family->add_option("--alpha", cfg.alpha, "alpha");
  family->add_option("--beta", cfg.beta, "beta (j2)");
  family->add_option("--gamma", cfg.gamma, "gamma (i1k1)");
  family->add_option("--param-k", cfg.param_k, "k (j2) or max k (grid)");
  family->add_option("--param-j", cfg.param_j, "j (i1k1) or max j (grid)");
  family->add_option("--max-len", cfg.max_len, "max parameter length (grid)");
  add_common(family);

  auto* lemmas = app.add_subcommand("lemmas", "run the bounded structural checks");
  lemmas->add_option("--max-len", cfg.max_len, "range knob for all checks (default 6)");
  add_common(lemmas);

  std::vector<const char*> argv{"wordeq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*verify || *solve) {
      if (cfg.i + cfg.j + cfg.k == 0 || *cfg.max_len < cfg.i + cfg.j + cfg.k) {
        err << "error: --max-len must be at least i + j + k and some exponent must be positive\n";
        return kUsage;
      }
      return *verify ? detail::cmd_verify(cfg, out, err) : detail::cmd_solve(cfg, out);
    }
    if (*family) {
      if (cfg.family == "j2" && (cfg.alpha.empty() || cfg.beta.empty())) {
        err << "error: --family j2 needs --alpha and --beta\n";
        return kUsage;
      }
      if (cfg.family == "i1k1" && (cfg.alpha.empty() || cfg.gamma.empty())) {
        err << "error: --family i1k1 needs --alpha and --gamma\n";
        return kUsage;
      }
      return detail::cmd_family(cfg, out, err);
    }
    if (cfg.max_len && *cfg.max_len == 0) {
      err << "error: --max-len must be at least 1\n";
      return kUsage;
    }
    return detail::cmd_lemmas(cfg, out);
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const invariant_violation& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace wordeq::cli
