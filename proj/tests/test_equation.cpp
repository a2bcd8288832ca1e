#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "wordeq/equation.hpp"
#include "wordeq/serialize.hpp"

using namespace wordeq;
using namespace wordeq::literals;

namespace {

EquationInstance make(std::size_t i, std::size_t j, std::size_t k, const char* x, const char* y, const char* u,
                      const char* v) {
  return {Exponents(i, j, k), Word(x), Word(y), Word(u), Word(v)};
}

SearchOptions options(std::size_t bound, bool distinct, unsigned shards = 1) {
  SearchOptions opt;
  opt.max_total_len = bound;
  opt.distinct_only = distinct;
  opt.shards = shards;
  return opt;
}

oracle::Quad quad(const EquationInstance& e) { return {e.x.str(), e.y.str(), e.u.str(), e.v.str()}; }

std::set<oracle::Quad> quads(const std::vector<EquationInstance>& v) {
  std::set<oracle::Quad> out;
  for (const auto& e : v) out.insert(quad(e));
  return out;
}

}  // namespace

TEST_CASE("check compares both sides letter for letter", "[equation]") {
  const auto a = make(1, 3, 1, "aabbbaa", "b", "a", "abbba");
  CHECK(check(a));
  CHECK(a.lhs() == "aabbbaabbbaabbbaa"_w);
  const auto b = make(2, 2, 1, "aaababa", "ba", "a", "ababaaaabab");
  CHECK(check(b));
  CHECK(b.lhs().size() == 25);
  CHECK_FALSE(check(make(2, 3, 1, "ab", "a", "a", "ab")));
  CHECK_THROWS_AS(EquationInstance::solution(Exponents(2, 3, 1), "ab"_w, "a"_w, "a"_w, "ab"_w), precondition_error);
  CHECK_THROWS_AS(Exponents(0, 0, 0), precondition_error);
}

TEST_CASE("periodicity of a solution", "[equation]") {
  CHECK(is_periodic_solution(make(1, 1, 1, "aa", "a", "a", "aaa")));
  CHECK_FALSE(is_periodic_solution(make(1, 3, 1, "aabbbaa", "b", "a", "abbba")));
  CHECK(is_periodic_solution(make(2, 3, 1, "ab", "abab", "ab", "abab")));
  CHECK_FALSE(is_periodic_solution(make(2, 3, 1, "ab", "ba", "ab", "ba")));
  CHECK_THROWS_AS(is_periodic_solution(make(2, 3, 1, "ab", "a", "a", "ab")), precondition_error);
}

TEST_CASE("engine matches the independent four-loop oracle on (1,2,1)", "[equation]") {
  for (bool distinct : {true, false}) {
    auto opt = options(12, distinct);
    opt.collect_raw = true;
    const auto r = enumerate_solutions(Exponents(1, 2, 1), opt);
    const auto expected = oracle::naive_solutions(1, 2, 1, 12, distinct);
    CHECK(r.total_solutions == (distinct ? 124u : 640u));
    CHECK(r.raw.size() == r.total_solutions);
    CHECK(quads(r.raw) == expected);
    CHECK(expected.count({"babab", "a", "bab", "aba"}) == 1);

    std::set<oracle::Quad> np;
    for (const auto& q : expected) {
      if (!oracle::periodic(q)) np.insert(q);
    }
    std::size_t engine_np = 0;
    for (const auto& e : r.raw) engine_np += is_periodic_solution(e) ? 0 : 1;
    CHECK(engine_np == np.size());
  }
}

TEST_CASE("canonical representatives for (1,2,1)", "[equation]") {
  const auto r = enumerate_solutions(Exponents(1, 2, 1), options(12, true));
  const std::vector<oracle::Quad> expected{
      {"a", "abaab", "aaba", "ab"}, {"a", "bab", "aba", "b"},     {"a", "babab", "aba", "bab"},
      {"a", "babab", "ababa", "b"}, {"a", "bbabb", "abba", "bb"}, {"aa", "baab", "aabaa", "b"},
      {"ab", "aaba", "abaab", "a"}, {"aba", "bab", "ababa", "b"}};
  std::vector<oracle::Quad> got;
  for (const auto& e : r.nonperiodic) got.push_back(quad(e));
  CHECK(got == expected);
  CHECK_FALSE(r.periodic_only);
  CHECK(canonical_representative(make(1, 2, 1, "babab", "a", "bab", "aba")) ==
        make(1, 2, 1, "aba", "bab", "ababa", "b"));
}

TEST_CASE("every emitted instance is a solution", "[equation]") {
  for (const Exponents& e : {Exponents(1, 1, 1), Exponents(2, 2, 1), Exponents(1, 3, 2), Exponents(3, 1, 1)}) {
    auto opt = options(13, false);
    opt.collect_raw = true;
    const auto r = enumerate_solutions(e, opt);
    for (const auto& inst : r.raw) REQUIRE(check(inst));
    for (const auto& inst : r.nonperiodic) {
      REQUIRE(check(inst));
      REQUIRE_FALSE(is_periodic_solution(inst));
      REQUIRE(canonical_representative(inst) == inst);
    }
  }
}

TEST_CASE("forcing verdicts", "[equation]") {
  const auto v1 = forcing_verdict(Exponents(2, 3, 1), Alphabet(2), 18);
  CHECK(v1.forced_up_to_bound);
  CHECK(v1.report.total_solutions == 84);

  const auto v2 = forcing_verdict(Exponents(2, 2, 1), Alphabet(2), 25);
  CHECK_FALSE(v2.forced_up_to_bound);
  REQUIRE(v2.witnesses.size() == 1);
  CHECK(v2.witnesses[0] == make(2, 2, 1, "a", "ababaaaabab", "aaababa", "ba"));

  const auto v3 = forcing_verdict(Exponents(1, 1, 1), Alphabet(2), 8);
  CHECK_FALSE(v3.forced_up_to_bound);
  CHECK(v3.witnesses.size() == 28);
  CHECK(v3.witnesses[0] == make(1, 1, 1, "a", "aaaaba", "aa", "aaab"));

  const auto v4 = forcing_verdict(Exponents(1, 3, 1), Alphabet(2), 17);
  REQUIRE(v4.witnesses.size() == 1);
  CHECK(v4.witnesses[0] == canonical_representative(make(1, 3, 1, "aabbbaa", "b", "a", "abbba")));
}

TEST_CASE("forcing holds beyond the vacuous bound", "[equation]") {
  // At bound 18 several of these exponents admit no distinct solution at
  // all; bound 30 has distinct (periodic) solutions for each of them.
  for (const Exponents& e : {Exponents(2, 3, 1), Exponents(1, 3, 2), Exponents(2, 3, 2), Exponents(3, 3, 1),
                             Exponents(2, 4, 1), Exponents(1, 4, 2), Exponents(2, 3, 3)}) {
    const auto v = forcing_verdict(e, Alphabet(2), 30, 2);
    CHECK(v.forced_up_to_bound);
    CHECK(v.report.total_solutions > 0);
  }
  const auto ternary = forcing_verdict(Exponents(2, 3, 1), Alphabet(3), 18, 2);
  CHECK(ternary.forced_up_to_bound);
}

TEST_CASE("search with empty words admitted", "[equation]") {
  auto opt = options(15, true);
  opt.allow_empty = true;
  opt.collect_raw = true;
  const auto r = enumerate_solutions(Exponents(2, 3, 1), opt);
  CHECK(r.periodic_only);
  bool saw_empty = false;
  for (const auto& inst : r.raw) {
    REQUIRE(check(inst));
    if (inst.x.empty() || inst.y.empty() || inst.u.empty() || inst.v.empty()) saw_empty = true;
  }
  CHECK(saw_empty);
}

TEST_CASE("split for i = k and even j", "[equation]") {
  const auto inst = make(1, 2, 1, "babab", "a", "bab", "aba");
  const auto halves = split_even_j(inst);
  REQUIRE(halves);
  CHECK(halves->first.lhs == "bababa"_w);
  CHECK(halves->second.lhs == "ababab"_w);
  CHECK(halves->first.holds());
  CHECK(halves->second.holds());
  CHECK_FALSE(split_even_j(make(2, 2, 1, "a", "a", "a", "a")));
  CHECK_FALSE(split_even_j(make(1, 3, 1, "a", "a", "a", "a")));
  const auto trivial = split_even_j(make(2, 4, 2, "ab", "b", "ab", "b"));
  REQUIRE(trivial);
  CHECK((trivial->first.holds() && trivial->second.holds()));
}

TEST_CASE("split equivalence is exhaustive for small i = k and even j", "[equation]") {
  for (std::size_t i : {1u, 2u}) {
    for (std::size_t j : {2u, 4u}) {
      const Exponents e(i, j, i);
      const auto words = oracle::strings_up_to(12);
      std::vector<std::pair<Word, Word>> pairs;
      for (std::size_t lx = 1; 2 * i * lx + j <= 12; ++lx) {
        for (std::size_t ly = 1; 2 * i * lx + j * ly <= 12; ++ly) {
          for (const auto& x : oracle::all_strings(lx)) {
            for (const auto& y : oracle::all_strings(ly)) pairs.emplace_back(Word(x), Word(y));
          }
        }
      }
      for (const auto& [x, y] : pairs) {
        for (const auto& [u, v] : pairs) {
          const EquationInstance inst{e, x, y, u, v};
          const auto halves = split_even_j(inst);
          REQUIRE(halves);
          REQUIRE(check(inst) == (halves->first.holds() && halves->second.holds()));
        }
      }
    }
  }
}

TEST_CASE("canonical set is invariant under letter permutation and mirror", "[equation]") {
  const auto swap_ab = [](const EquationInstance& e) {
    const auto sw = [](const Word& w) {
      std::string s(w.view());
      for (char& c : s) c = c == 'a' ? 'b' : 'a';
      return Word(s);
    };
    return EquationInstance{e.exps, sw(e.x), sw(e.y), sw(e.u), sw(e.v)};
  };
  for (const Exponents& e : {Exponents(1, 2, 1), Exponents(1, 1, 1), Exponents(2, 1, 1), Exponents(2, 2, 1)}) {
    const std::size_t bound = e == Exponents(2, 2, 1) ? 25 : 11;
    const auto r = enumerate_solutions(e, options(bound, true));
    std::vector<EquationInstance> permuted, mirrored;
    for (const auto& inst : r.nonperiodic) {
      permuted.push_back(canonical_representative(swap_ab(inst)));
      mirrored.push_back(canonical_representative(mirror(inst)));
    }
    std::sort(permuted.begin(), permuted.end(), instance_less);
    CHECK(permuted == r.nonperiodic);

    const auto rm = enumerate_solutions(e.mirrored(), options(bound, true));
    std::sort(mirrored.begin(), mirrored.end(), instance_less);
    CHECK(mirrored == rm.nonperiodic);
    CHECK(rm.total_solutions == r.total_solutions);
  }

  // Three letters: every one of the six renamings lands in the same orbit.
  auto opt = options(7, true);
  opt.alphabet = Alphabet(3);
  const auto r3 = enumerate_solutions(Exponents(1, 1, 1), opt);
  REQUIRE_FALSE(r3.nonperiodic.empty());
  std::string perm = "abc";
  do {
    for (const auto& inst : r3.nonperiodic) {
      const auto ren = [&](const Word& w) {
        std::string s(w.view());
        for (char& c : s) c = perm[static_cast<std::size_t>(c - 'a')];
        return Word(s);
      };
      const EquationInstance moved{inst.exps, ren(inst.x), ren(inst.y), ren(inst.u), ren(inst.v)};
      REQUIRE(canonical_representative(moved) == inst);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("reports do not depend on the shard count", "[equation]") {
  for (const Exponents& e : {Exponents(1, 2, 1), Exponents(2, 2, 1)}) {
    std::string first;
    for (unsigned shards : {1u, 2u, 3u, 8u}) {
      auto opt = options(e.i == 1 ? 12 : 25, true, shards);
      opt.collect_raw = true;
      const auto r = enumerate_solutions(e, opt);
      json j = to_json(r);
      j["raw_count"] = r.raw.size();
      const std::string dumped = j.dump();
      if (first.empty()) first = dumped;
      REQUIRE(dumped == first);
    }
  }
}

TEST_CASE("engine preconditions", "[equation]") {
  CHECK_THROWS_AS(enumerate_solutions(Exponents(2, 3, 1), options(5, true)), precondition_error);
  CHECK_NOTHROW(enumerate_solutions(Exponents(2, 3, 1), options(6, true)));
  CHECK_THROWS_AS(enumerate_solutions(Exponents(2, 0, 1), options(10, true)), precondition_error);
  CHECK_THROWS_AS(enumerate_solutions(Exponents(0, 2, 0), options(10, true)), precondition_error);
}

TEST_CASE("conjecture scan", "[equation]") {
  const auto a = conjecture_scan(Exponents(3, 2, 1), options(16, false));
  CHECK(a.periodic_only);
  CHECK(a.total_solutions == 32);
  const auto b = conjecture_scan(Exponents(4, 2, 2), options(16, false));
  CHECK(b.periodic_only);
  CHECK(b.total_solutions == 8);
  CHECK_THROWS_AS(conjecture_scan(Exponents(2, 2, 1), options(25, true)), precondition_error);
  CHECK_THROWS_AS(conjecture_scan(Exponents(3, 3, 1), options(25, true)), precondition_error);
  CHECK_THROWS_AS(conjecture_scan(Exponents(3, 2, 0), options(25, true)), precondition_error);
}

TEST_CASE("report JSON schema", "[equation]") {
  const auto r = enumerate_solutions(Exponents(1, 3, 1), options(17, true));
  CHECK(to_json(r).dump() ==
        R"({"i":1,"j":3,"k":1,"alphabet":2,"bound":17,"total_solutions":36,"periodic_only":false,)"
        R"("nonperiodic":[{"x":"a","y":"abbba","u":"aabbbaa","v":"b"}]})");
}
