#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hck/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hck::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("rootdatum") {
  auto r = run({"rootdatum", "--datum", "a2", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["weyl_order"] == 6);
  r = run({"rootdatum", "--datum", R"({"type": "A", "n": 2, "central_rank": 1})"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "GL3"));
}

TEST_CASE("heart-check escalates the GL3 mismatch") {
  auto r = run({"heart-check", "--datum", "gl3", "--x", "1/2,0,0", "--r", "1", "--theta", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdicts"][0]["status"] == "MISMATCH");
  CHECK(j["escalations"][0]["obstruction"] == "DISTINCT_VOLUME");
  CHECK(j["verdict"] == "G_{x,r} ∉ K^♥(S,G)");

  r = run({"heart-check", "--datum", "gl3", "--x", "0,0,0", "--r", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "verdict: PROVEN_CONDITION_1"));
}

TEST_CASE("counterexample") {
  auto r = run({"counterexample", "--q", "symbolic", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["index_I_K1"] == "q*(q-1)^2");
  CHECK(j["index_I_I1"] == "q^2*(q-1)^2");
  CHECK(j["obstruction"] == "DISTINCT_VOLUME");
  CHECK(j["matrices"]["I1"] == json::parse("[[1,1],[2,1]]"));
  r = run({"counterexample", "--q", "5"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "[I:K_1] = 80, [I:I_1] = 400"));
  CHECK(run({"counterexample", "--q", "6"}).code == hck::kExitInput);
}

TEST_CASE("spade-check") {
  auto r = run({"spade-check", "--datum", "gl3", "--x", "1/2,0,0", "--r", "1", "--blocks", "1,2", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "PASS"));
  CHECK_FALSE(has(r.out, "FAIL"));
  CHECK(run({"spade-check", "--datum", "a2", "--x", "0,0", "--r", "1"}).code == hck::kExitInput);
  CHECK(run({"spade-check", "--datum", "gl3", "--x", "0,0,0", "--r", "1", "--blocks", "2,2"}).code == hck::kExitInput);
}

TEST_CASE("clifford catalogs") {
  auto r = run({"clifford", "--catalog", "builtin", "--check", "all", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["entries"].size() == 16);
  for (const auto& e : j["entries"]) CHECK(e["status"] == "PASS");

  r = run({"clifford", "--catalog", std::string(HCK_DATA_DIR) + "/clifford_catalog.json"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "PASS"));

  const std::string bad = "hck_test_bad_catalog.json";
  std::ofstream(bad) << "{\"entries\": [\n  {\"name\": \"x\",, }\n]}";
  r = run({"clifford", "--catalog", bad});
  std::remove(bad.c_str());
  CHECK(r.code == hck::kExitInput);
  CHECK(has(r.err, "line 2"));
  CHECK(run({"clifford", "--catalog", "/nonexistent.json"}).code == hck::kExitInput);
}

TEST_CASE("torus-center") {
  auto r = run({"torus-center", "--datum", "gl2", "--q", "3", "--radius", "2", "--check", "roc", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["orbit_count"] == 55);
  CHECK(j["roc"]["status"] == "PASS");
  CHECK(run({"torus-center", "--datum", "gl2", "--q", "6", "--radius", "1"}).code == hck::kExitInput);
}

TEST_CASE("iwahori-center") {
  auto r = run({"iwahori-center", "--datum", "a1", "--radius", "0", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["status"] == "PASS");
  CHECK(j["basis"].size() == 1);
  r = run({"iwahori-center", "--datum", "gl2", "--radius", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "15 orbit sums"));
}

TEST_CASE("verify-all on a subset") {
  auto r = run({"verify-all", "--criterion", "1,7", "--no-timing", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["status"] == "PASS");
  CHECK(j["suites"].size() == 2);
  CHECK_FALSE(j["suites"][0].contains("seconds"));
}

TEST_CASE("input validation and exit codes") {
  CHECK(run({}).code != 0);
  CHECK(run({"heart-check", "--datum", "gl3", "--x", "1/2,0,0", "--r", "1", "--bogus"}).code != 0);
  CHECK(run({"rootdatum", "--datum", "a2", "--format", "yaml"}).code != 0);
  auto r = run({"heart-check", "--datum", "gl3", "--x", "0.5,0,0", "--r", "1"});
  CHECK(r.code == hck::kExitInput);
  CHECK(has(r.err, "error:"));
  CHECK(run({"heart-check", "--datum", "gl3", "--x", "1/2,0", "--r", "1"}).code == hck::kExitInput);
  CHECK(run({"heart-check", "--datum", "gl3", "--x", "1/2,0,0", "--r", "0"}).code == hck::kExitInput);
  CHECK(run({"rootdatum", "--datum", R"({"cartan": [[2,-2],[-3,2]]})"}).code == hck::kExitInput);
  CHECK(run({"rootdatum", "--datum", "{\"type\": "}).code == hck::kExitInput);
  CHECK(run({"rootdatum", "--datum", R"({"type": 5, "n": 2})"}).code == hck::kExitInput);
}

TEST_CASE("output is deterministic and independent of the job count") {
  const std::vector<std::string> a{"clifford", "--format", "json", "--jobs", "1"};
  const std::vector<std::string> b{"clifford", "--format", "json", "--jobs", "3"};
  CHECK(run(a).out == run(a).out);
  CHECK(run(a).out == run(b).out);
  const std::vector<std::string> h{"heart-check", "--datum", "b2", "--x", "1/3,1/4", "--r", "3/2", "--format", "json"};
  auto h3 = h;
  h3.insert(h3.end(), {"--jobs", "4"});
  CHECK(run(h).out == run(h3).out);
}
