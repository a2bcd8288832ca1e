#pragma once

// JSON forms of reports. Key order is fixed so that identical reports
// serialize to identical bytes.

#include <string>

#include <nlohmann/json.hpp>

#include "wordeq/code.hpp"
#include "wordeq/equation.hpp"
#include "wordeq/families.hpp"
#include "wordeq/lemmas.hpp"

namespace wordeq {

using json = nlohmann::ordered_json;

inline json instance_json(const EquationInstance& inst) {
  return json{{"x", inst.x.str()}, {"y", inst.y.str()}, {"u", inst.u.str()}, {"v", inst.v.str()}};
}

inline json to_json(const SolutionReport& r) {
  json nonperiodic = json::array();
  for (const auto& inst : r.nonperiodic) nonperiodic.push_back(instance_json(inst));
  return json{{"i", r.exps.i},
              {"j", r.exps.j},
              {"k", r.exps.k},
              {"alphabet", r.alphabet_size},
              {"bound", r.bound},
              {"total_solutions", r.total_solutions},
              {"periodic_only", r.periodic_only},
              {"nonperiodic", std::move(nonperiodic)}};
}

inline json to_json(const ImprimitiveSet& s) {
  json members = json::array();
  for (const auto& m : s.members) members.push_back(std::string(m.letters()));
  return json{{"shape", std::string(to_string(s.shape))},
              {"k", s.shape == ImprimitiveShape::empty ? json(nullptr) : json(s.k)},
              {"members", std::move(members)}};
}

inline json family_json(const EquationInstance& inst, const FamilyJ2Params& p) {
  json out = instance_json(inst);
  out["family"] = "j2";
  out["params"] = json{{"alpha", p.alpha.str()}, {"beta", p.beta.str()}, {"k", p.k}};
  return out;
}

inline json family_json(const EquationInstance& inst, const FamilyI1K1Params& p) {
  json out = instance_json(inst);
  out["family"] = "i1k1";
  out["params"] = json{{"alpha", p.alpha.str()}, {"gamma", p.gamma.str()}, {"j", p.j}};
  return out;
}

inline json to_json(const LemmaOutcome& o) {
  json out{{"name", o.name}, {"statement", o.statement}, {"range", o.range}, {"cases", o.cases}, {"passed", o.passed}};
  if (!o.passed) out["counterexample"] = o.counterexample;
  return out;
}

}  // namespace wordeq
