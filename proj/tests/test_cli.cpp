#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "wordeq_cli.hpp"

using namespace wordeq;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify exit codes", "[cli]") {
  CHECK(run({"verify", "--i", "2", "--j", "3", "--k", "1", "--max-len", "18"}).code == 0);

  const auto w = run({"verify", "--i", "1", "--j", "3", "--k", "1", "--max-len", "17"});
  CHECK(w.code == 2);
  CHECK(w.out.find("x=a y=abbba u=aabbbaa v=b") != std::string::npos);
  CHECK(w.err.find("warning") != std::string::npos);

  const auto small = run({"verify", "--i", "2", "--j", "3", "--k", "1", "--max-len", "3"});
  CHECK(small.code == 64);
  CHECK(run({"verify", "--i", "2", "--j", "3"}).code == 64);
  CHECK(run({"verify", "--i", "x", "--j", "3", "--k", "1", "--max-len", "9"}).code == 64);
  CHECK(run({"verify", "--i", "2", "--j", "3", "--k", "1", "--max-len", "9", "--format", "xml"}).code == 64);
  CHECK(run({"verify", "--i", "2", "--j", "0", "--k", "1", "--max-len", "9"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify JSON", "[cli]") {
  const auto r = run({"verify", "--i", "2", "--j", "3", "--k", "1", "--max-len", "18", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["forced_up_to_bound"] == true);
  CHECK(j["periodic_only"] == true);
  CHECK(j["total_solutions"] == 84);
}

TEST_CASE("solve", "[cli]") {
  const auto a = run({"solve", "--i", "1", "--j", "2", "--k", "1", "--max-len", "12", "--format", "json",
                      "--distinct-only"});
  REQUIRE(a.code == 0);
  const auto ja = json::parse(a.out);
  bool found = false;
  for (const auto& e : ja["nonperiodic"]) {
    found = found || (e["x"] == "aba" && e["y"] == "bab" && e["u"] == "ababa" && e["v"] == "b");
  }
  CHECK(found);
  CHECK(ja["total_solutions"] == 124);

  const auto all = json::parse(run({"solve", "--i", "1", "--j", "2", "--k", "1", "--max-len", "12", "--format",
                                    "json"}).out);
  CHECK(all["total_solutions"] == 640);

  const auto b = json::parse(run({"solve", "--i", "1", "--j", "1", "--k", "1", "--max-len", "6", "--format", "json"}).out);
  CHECK_FALSE(b["nonperiodic"].empty());

  const auto c = json::parse(run({"solve", "--i", "2", "--j", "4", "--k", "2", "--max-len", "16", "--format", "json"}).out);
  CHECK(c["periodic_only"] == true);
}

TEST_CASE("output is identical for every shard count", "[cli]") {
  std::string first;
  for (const char* shards : {"1", "2", "8"}) {
    const auto r = run({"solve", "--i", "1", "--j", "2", "--k", "1", "--max-len", "12", "--format", "json",
                        "--shards", shards});
    if (first.empty()) first = r.out;
    CHECK(r.out == first);
  }
  CHECK(run({"solve", "--i", "1", "--j", "2", "--k", "1", "--max-len", "12", "--shards", "0"}).code == 64);
}

TEST_CASE("family subcommand", "[cli]") {
  const auto a = run({"family", "--family", "i1k1", "--alpha", "a", "--gamma", "b", "--param-j", "3", "--format",
                      "json"});
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["x"] == "aabbbaa");

  const auto b = run({"family", "--family", "j2", "--alpha", "a", "--beta", "b", "--param-k", "1"});
  CHECK(b.code == 0);
  CHECK(b.out.find("aaababaaaababababaaaababa") != std::string::npos);

  CHECK(run({"family", "--family", "j2", "--alpha", "ab", "--beta", "abab"}).code == 65);
  CHECK(run({"family", "--family", "i1k1", "--alpha", "a", "--gamma", "b", "--param-j", "4"}).code == 65);
  CHECK(run({"family", "--family", "j2", "--alpha", "a", "--beta", "c"}).code == 65);
  CHECK(run({"family", "--family", "j2", "--alpha", "a"}).code == 64);
  CHECK(run({"family", "--family", "zz"}).code == 64);

  const auto g = run({"family", "--family", "grid", "--max-len", "2", "--param-k", "2", "--param-j", "5", "--format",
                      "json"});
  REQUIRE(g.code == 0);
  const auto jg = json::parse(g.out);
  CHECK(jg["parameter_pairs"] == 26);
  CHECK(jg["failures"] == 0);
}

TEST_CASE("lemmas subcommand", "[cli]") {
  const auto a = run({"lemmas", "--max-len", "2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CHECK(run({"lemmas", "--max-len", "0"}).code == 64);
  const auto j = json::parse(run({"lemmas", "--max-len", "3", "--format", "json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["lemmas"].size() == 14);
}
