#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string path = "/tmp/sif_cli_test_" + std::to_string(counter++) + ".out";
  std::string cmd = std::string(SIF_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult res;
#ifdef WEXITSTATUS
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
#else
  res.status = rc;
#endif
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  res.out = ss.str();
  std::remove(path.c_str());
  return res;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("mode applies a vertex operator") {
  // e^w_(-3/2) e^w in A1 lands on e^{2w}
  std::string ew = R"({"terms":[{"coeff":["1"],"creators":[],"lattice":["1"]}]})";
  RunResult r = run_cli("mode --rs A1 --A " + quote(ew) + " --n -3/2 --v " + quote(ew));
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  REQUIRE(out["terms"].size() == 1);
  CHECK(out["terms"][0]["lattice"] == json::array({"2"}));
  CHECK(out["terms"][0]["creators"].empty());
}

TEST_CASE("mode rejects malformed input with exit 2") {
  std::string ew = R"({"terms":[{"coeff":["1"],"creators":[],"lattice":["1"]}]})";
  CHECK(run_cli("mode --rs A1 --A '{broken' --n -1 --v " + quote(ew)).status == 2);
  CHECK(run_cli("mode --rs A1 --A '{\"terms\":3}' --n -1 --v " + quote(ew)).status == 2);
  CHECK(run_cli("mode --rs ZZ9 --A " + quote(ew) + " --n -1 --v " + quote(ew)).status == 2);
  CHECK(run_cli("mode --rs A1 --A " + quote(ew) + " --n nope --v " + quote(ew)).status == 2);
  // missing required option is a CLI parse error
  CHECK(run_cli("mode --rs A1").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
}

TEST_CASE("mode annihilates off-parity input") {
  std::string ew = R"({"terms":[{"coeff":["1"],"creators":[],"lattice":["1"]}]})";
  RunResult r = run_cli("mode --rs A1 --A " + quote(ew) + " --n 0 --v " + quote(ew));
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["terms"].empty());
}

TEST_CASE("domain errors during computation exit 3") {
  // column lengths outside 1..rank
  CHECK(run_cli("relations --rs A2 --i 5 --j 1").status == 3);
  CHECK(run_cli("relations --rs A2 --i 1 --j 2").status == 3);
}

TEST_CASE("char reproduces the global dimension series") {
  RunResult r = run_cli("char --rs A1 --lambda 2 --cutoff 2");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["graded_dims"] == json::array({3, 4, 7}));
  RunResult r2 = run_cli("char --rs A2 --lambda 1,1 --cutoff 3");
  REQUIRE(r2.status == 0);
  CHECK(json::parse(r2.out)["graded_dims"] == json::array({8, 17, 26, 35}));
}

TEST_CASE("span reports quotient dimensions") {
  RunResult r = run_cli("span --rs A1 --lambda 1 --cutoff 2");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["quotient_dims"] == json::array({2, 2, 2}));
  CHECK(out["rank"].get<long>() > 0);
  // non-dominant lambda is a domain error
  CHECK(run_cli("span --rs A1 --lambda -1 --cutoff 1").status == 3);
}

TEST_CASE("mult builds ring elements from labels") {
  RunResult r = run_cli(
      "mult --rs A2 --cutoff 2 --factors "
      "'[{\"node\":1,\"label\":[1],\"degree\":0},{\"node\":2,\"label\":[1,2],\"degree\":0}]'");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["lambda"] == json::array({"1", "1"}));
  CHECK(!out["reduced"].empty());
  // permuting the factors yields byte-identical output
  RunResult r2 = run_cli(
      "mult --rs A2 --cutoff 2 --factors "
      "'[{\"node\":2,\"label\":[1,2],\"degree\":0},{\"node\":1,\"label\":[1],\"degree\":0}]'");
  REQUIRE(r2.status == 0);
  CHECK(r.out == r2.out);
  // unknown label is a parse-level error
  CHECK(run_cli("mult --rs A2 --factors '[{\"node\":1,\"label\":[9]}]'").status == 2);
}

TEST_CASE("verify suites pass and are deterministic") {
  for (const char* args : {"verify --rs A1 --suite voa-axioms --cutoff 2 --seed 7",
                           "verify --rs A2 --suite voa-axioms --cutoff 2 --seed 11",
                           "verify --rs A1 --suite filtration --cutoff 2",
                           "verify --rs A2 --suite relations --cutoff 2",
                           "verify --rs A2 --suite characters"}) {
    RunResult r = run_cli(args);
    CHECK(r.status == 0);
    json rep = json::parse(r.out);
    CHECK(rep["all_pass"] == true);
    for (const json& c : rep["checks"]) CHECK(c["pass"] == true);
    RunResult r2 = run_cli(args);
    CHECK(r2.out == r.out);  // byte-identical reruns
  }
  CHECK(run_cli("verify --rs A1 --suite no-such-suite").status == 2);
  // the relation suite needs rank >= 2
  CHECK(run_cli("verify --rs A1 --suite relations").status == 3);
}

TEST_CASE("tableaux statistics and construction") {
  RunResult r = run_cli("tableaux --rs A3 --I 2,3 --J 1,4");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  CHECK(out["P"] == json::array({1, 2, 3}));
  CHECK(out["k"] == 1);
  // inadmissible order is a domain error
  CHECK(run_cli("tableaux --rs A3 --I 2 --J 1").status == 3);
  // rank-13 tableau via the rank override
  RunResult t = run_cli("tableaux --rs A2 --r 13 --i 10 --j 6 --l 3");
  REQUIRE(t.status == 0);
  json tj = json::parse(t.out);
  CHECK(tj["C"] == json::array({1, 2, 3, 5, 6, 9, 10, 11, 12, 13}));
  CHECK(tj["D"] == json::array({1, 2, 3, 4, 7, 8}));
  CHECK(tj["k"] == 3);
  CHECK(run_cli("tableaux --rs A2").status == 2);  // neither input form
}

TEST_CASE("relations emits the singlet series") {
  RunResult r = run_cli("relations --rs A2 --i 2 --j 1 --cutoff 2");
  REQUIRE(r.status == 0);
  json out = json::parse(r.out);
  REQUIRE(out.is_array());
  REQUIRE(out.size() == 1);
  CHECK(out[0]["i"] == 2);
  CHECK(out[0]["j"] == 1);
  CHECK(out[0]["s"] == 1);
  CHECK(out[0]["trivial"] == false);
  CHECK(out[0]["coefficients"].size() == 3);
  CHECK(out[0]["coefficients"][0]["terms"].size() == 3);
}
