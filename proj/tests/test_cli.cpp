#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "rexcalc/serialize.hpp"

using namespace rexcalc;

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

} // namespace

TEST_CASE("graph") {
  auto r = run({"graph", "12321", "--conflated", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph conflated {", 0) == 0);
  CHECK(r.out.find("->") != std::string::npos);

  r = run({"graph", "246", "--conflated", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["vertices"].size() == 1);

  r = run({"graph", "12321"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("expanded graph, 6 vertices", 0) == 0);

  r = run({"graph", "11"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"graph", "12321", "--format", "png"}).code == 2);
  CHECK(run({"graph", "12321", "--expanded", "--conflated"}).code == 2);
  CHECK(run({"graph", "5", "--rank", "3"}).code == 2);
}

TEST_CASE("eval") {
  const std::string x = "1;1;1;x3;1;1";
  const std::string v1 = "13231 31231 31213 32123 31213 13213 13231 12321 13231";
  const std::string v2 = "13231,12321,13231,31231,31213,32123,31213,13213,13231";
  auto r1 = run({"eval", "12321", "--path", v1, "--element", x});
  auto r2 = run({"eval", "12321", "--path", v2, "--element", x});
  REQUIRE(r1.code == 0);
  REQUIRE(r2.code == 0);
  const auto w = parse_word("13231");
  CHECK(element_from_json(json::parse(r1.out)) == parse_element_spec(w, 4, "1;x2;1;1;1;1"));
  CHECK(element_from_json(json::parse(r2.out)) == parse_element_spec(w, 4, x));

  // Arrows, and conflated vertex names.
  auto r = run({"eval", "12321", "--path", "13231 -> 12321", "--element", x});
  CHECK(r.code == 0);
  CHECK(element_from_json(json::parse(r.out)).word() == parse_word("12321"));
  r = run({"eval", "12321", "--conflated", "--path", "c,s,c,t,c", "--element", "1;x1;1;1;1;1"});
  CHECK(r.code == 0);
  CHECK(element_from_json(json::parse(r.out)).word() == parse_word("13213"));

  // Empty path echoes the input.
  r = run({"eval", "12321", "--path", "", "--element", "1;x1;1;1;1;1"});
  CHECK(r.code == 0);
  CHECK(element_from_json(json::parse(r.out)) == parse_element_spec(parse_word("12321"), 4, "1;x1;1;1;1;1"));

  CHECK(run({"eval", "12321", "--path", "13231 32123", "--element", x}).code == 2);
  CHECK(run({"eval", "12321", "--path", "13231", "--element", "1;1"}).code == 2);
  CHECK(run({"eval", "12321", "--path", "13231"}).code == 2);
}

TEST_CASE("fpc") {
  auto r = run({"fpc", "23121", "--max-len", "9"});
  CHECK(r.code == 0);
  CHECK(r.out == "23121 maxLen=9: Holds\n");
  r = run({"fpc", "12321", "--max-len", "5", "--format", "json"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["holds"] == false);
  CHECK(run({"fpc", "121321", "--max-len", "12", "--budget", "5"}).code == 3);
  CHECK(run({"fpc", "121321", "--budget", "0"}).code == 2);
  CHECK(run({"fpc", "12321", "--max-len", "2"}).code == 2);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "zam", "--rank", "3"}).code == 0);
  CHECK(run({"verify", "lemmas"}).code == 0);
  CHECK(run({"verify", "family"}).code == 0);
  CHECK(run({"verify", "counterexample"}).code == 0);
  auto r = run({"verify", "refined", "--rank", "4", "--max-len", "10", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["holds"] == true);
  r = run({"verify", "fpc-s4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("12321\t•→•→•\tCounterexampleFound") != std::string::npos);
  CHECK(r.out.find("UNEXPECTED") == std::string::npos);
  CHECK(run({"verify", "refined", "--rank", "4", "--max-len", "10", "--budget", "5"}).code == 3);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget from the environment") {
  ::setenv("REXCALC_BUDGET", "10", 1);
  CHECK(run({"verify", "refined"}).code == 3);
  ::unsetenv("REXCALC_BUDGET");
  CHECK(run({"verify", "refined", "--max-len", "8"}).code == 0);
}
