#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "tarski/cli.hpp"
#include "tarski/error.hpp"
#include "tarski/suites.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int const code = tarski::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("analyze a finite instance")
{
  auto const r = run({"analyze", "--in", "I3", "--json"});
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["flags"]["is_fundamental"] == true);
  CHECK(j["flags"]["is_zero_simplifying"] == true);
  CHECK(j["classification"]["n"] == 3);
}

TEST_CASE("witness commands")
{
  auto const f3 = run({"witness", "f3", "--cn", "2", "--e", "[1]"});
  CHECK(f3.code == 0);
  CHECK(f3.out.find("{111->12, 112->111, 12->112, 2->2}") != std::string::npos);
  CHECK(f3.out.find("PASS  g^3 = 1") != std::string::npos);
  CHECK(f3.out.find("FAIL") == std::string::npos);

  auto const j = nlohmann::json::parse(run({"witness", "f1", "--cn", "2", "--e", "[1]", "--p", "1|1", "--json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["inputs"]["p"] == "e|1");

  for (auto kind : {"f2", "infinitesimal", "properly-infinite", "transfer", "conjugator", "iso", "factorize",
                    "principality", "moved-point", "separate", "cover", "ultrafilter", "hengist"}) {
    auto const w = run({"witness", kind, "--cn", "2", "--e", "[1]", "--f", "[21]", "--t", "{1->2,2->1}", "--s",
                        "{1->11}", "--p", "1|2"});
    CHECK_MESSAGE(w.code == 0, kind, w.out, w.err);
  }
}

TEST_CASE("round trips and groupoids")
{
  CHECK(run({"roundtrip", "--in", "I2"}).code == 0);
  CHECK(run({"roundtrip", "--groupoid", "pair:2"}).code == 0);
  CHECK(run({"groupoid", "--file", "cyclic:2", "--json"}).code == 0);
  CHECK(run({"finite", "--in", "prod:I2xI2", "--s", "({1->2},{})"}).code == 0);
  CHECK(run({"cuntz", "--cn", "2", "--s", "{11->2, 2->11}"}).code == 0);
}

TEST_CASE("suites through the command line")
{
  CHECK(run({"test", "axioms", "--instance", "cn:2", "--samples", "1000", "--seed", "42"}).code == 0);
  CHECK(run({"test", "duality", "--in", "I2"}).code == 0);
  CHECK(run({"test", "witnesses", "--cn", "2", "--samples", "100", "--seed", "7"}).code == 0);
  for (auto const& name : tarski::suites::names())
    CHECK(run({"test", name, "--samples", "20"}).code == 0);
}

TEST_CASE("exit codes")
{
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"test", "nonsense"}).code == 2);
  CHECK(run({"cuntz", "--cn", "2", "--s", "{1->1, 1->2}"}).code == 2);
  CHECK(run({"finite", "--in", "I3", "--s", "{1->"}).code == 2);
  CHECK(run({"witness", "iso", "--cn", "3", "--e", "[1]", "--f", "[1,2]"}).code == 1);
  CHECK(run({"witness", "f3", "--cn", "2", "--e", "[]"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic")
{
  for (std::vector<std::string> args : {std::vector<std::string>{"test", "support", "--cn", "3", "--seed", "5"},
                                        {"analyze", "--cn", "2", "--json"},
                                        {"witness", "f2", "--cn", "2", "--t", "{1->2,2->1}", "--e", "[1]"}}) {
    auto const a = run(args);
    auto const b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("suite reports")
{
  tarski::suites::Options o;
  o.instance = "I2";
  auto const r = tarski::suites::run("axioms", o);
  CHECK(r.passed());
  CHECK(r.at("associativity").cases == 343);
  CHECK_THROWS_AS(tarski::suites::run("nope", o), tarski::Error);
}
