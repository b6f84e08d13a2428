// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "lisfmat/cli/commands.h"
#include "lisfmat/errors.h"
#include "support/helpers.h"

namespace lisfmat {
namespace {

using namespace testing;

namespace fs = std::filesystem;

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "lisfmat_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& body) {
  const fs::path path = scratch_dir() / name;
  std::ofstream(path) << body;
  return path;
}

int run(const std::string& args) {
  const std::string cmd = std::string(LISFMAT_BINARY) + " " + args +
                          " > " + (scratch_dir() / "stdout.txt").string() +
                          " 2> " + (scratch_dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

nlohmann::ordered_json without_timing(nlohmann::ordered_json j) {
  j.erase("timing_ms");
  return j;
}

const char* kSharedVector = R"j({
  "field": "Q",
  "ambient_dim": 3,
  "sets": [
    {"finite": [["1", "1", "0"], ["1", "0", "0"], ["1", "-1", "0"], ["2", "1", "0"]]},
    {"finite": [["1", "1", "0"], ["0", "0", "1"], ["1", "1", "1"], ["1", "1", "-1"]]}
  ]
})j";

TEST_CASE("instance files round-trip") {
  for (const char* name : {"ex2", "ex3"}) {
    const Instance a = example_instance(name);
    CHECK(parse_instance(serialize_instance(a)) == a);
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    MixedFamilyParams p;
    p.seed = seed;
    p.n = 4;
    p.l = 3;
    p.field = test_fields()[seed % 5];
    p.punctured_probability = 0.4;
    const Instance a{random_mixed_family(p), std::nullopt};
    CHECK(parse_instance(serialize_instance(a)) == a);

    DirectSumFamilyParams q;
    q.seed = seed;
    q.k = 2;
    q.n = 3;
    q.m = 4;
    q.l = 7;
    auto [f, d] = random_direct_sum_family(q);
    const Instance b{f, d};
    CHECK(parse_instance(serialize_instance(b)) == b);
  }
}

TEST_CASE("bundled instance files parse and round-trip") {
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(LISFMAT_INSTANCE_DIR)) {
    CAPTURE(entry.path().string());
    const Instance a = load_instance(entry.path().string());
    CHECK(parse_instance(serialize_instance(a)) == a);
    ++count;
  }
  CHECK(count >= 5);
  CHECK(load_instance(std::string(LISFMAT_INSTANCE_DIR) + "/ex3.json") ==
        example_instance("ex3"));
}

TEST_CASE("instance parse errors name the location") {
  const std::string bad = R"j({"field": "Q", "ambient_dim": 2,
    "sets": [{"finite": [["1", "0"]]}, {"finite": [["1", "1/0"]]}]})j";
  try {
    parse_instance(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("sets[1].finite[0][1]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"j({"field": "GF(4)", "ambient_dim": 1, "sets": []})j"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"j({"field": "Q", "ambient_dim": 2, "sets": [{"finite": [["1"]]}]})j"),
      ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"j({"field": "Q", "ambient_dim": 2, "sets": [{"line": [["1", "0"]]}]})j"),
      ParseError);
}

TEST_CASE("check-lisf reports") {
  const Report r = cmd_check_lisf(parse_instance(kSharedVector), {});
  CHECK(r.text.find("verdict: NOT LISF") != std::string::npos);
  CHECK(r.text.find("set 1: 1 * (1, 1, 0)") != std::string::npos);
  CHECK(r.text.find("set 2: -1 * (1, 1, 0)") != std::string::npos);
  CHECK(r.data["is_lisf"] == false);
  CHECK(r.exit_code == kExitOk);

  const Instance single = parse_instance(
      R"j({"field": "Q", "ambient_dim": 2, "sets": [{"finite": [["1", "0"]]}]})j");
  CHECK(cmd_check_lisf(single, {}).text.find("verdict: LISF") != std::string::npos);
}

TEST_CASE("build-matroid reports") {
  BuildMatroidOptions o;
  o.verify_axioms = true;
  o.summary = true;
  const Report r = cmd_build_matroid(example_instance("ex3"), o);
  CHECK(r.text.find("{{}, {1}, {2}, {3}, {1,3}}") != std::string::npos);
  CHECK(r.text.find("I.3 VIOLATED witness ({2},{1,3})") != std::string::npos);
  CHECK(r.text.find("MATROID: no") != std::string::npos);

  const Instance identity = parse_instance(R"j({"field": "Q", "ambient_dim": 2,
    "sets": [{"finite": [["1", "0"]]}, {"finite": [["0", "1"]]}]})j");
  BuildMatroidOptions oracle;
  oracle.verify_axioms = true;
  oracle.oracle = true;
  const Report m = cmd_build_matroid(identity, oracle);
  CHECK(m.text.find("MATROID: yes") != std::string::npos);
  CHECK(m.text.find("ORACLE: EQUAL") != std::string::npos);

  CHECK_THROWS_AS(cmd_build_matroid(parse_instance(kSharedVector), oracle),
                  HypothesesNotMet);
}

TEST_CASE("greedy reports") {
  const Report r = cmd_greedy(example_instance("ex3"), parse_weights("3,5,3"));
  CHECK(r.text.find("greedy: {2} total 5") != std::string::npos);
  CHECK(r.text.find("exhaustive: {1,3} total 6") != std::string::npos);
  CHECK(r.text.find("DISAGREE") != std::string::npos);
  const Report zero = cmd_greedy(example_instance("ex3"), parse_weights("0,0,0"));
  CHECK(zero.text.find("AGREE") != std::string::npos);
  CHECK(zero.text.find("DISAGREE") == std::string::npos);
  CHECK_THROWS_AS(cmd_greedy(example_instance("ex3"), parse_weights("1,2")),
                  ParamError);
  CHECK_THROWS_AS(parse_weights("1,x"), ParseError);
}

TEST_CASE("suite parameters") {
  SuiteOptions o;
  o.kind = "t4";
  o.n = 1;
  CHECK_THROWS_AS(cmd_random_suite(o), ParamError);
  o.n.reset();
  o.field = "GF(5)";
  CHECK_THROWS_AS(cmd_random_suite(o), ParamError);
  o.kind = "t9";
  CHECK_THROWS_AS(cmd_random_suite(o), ParamError);
}

TEST_CASE("suite reports are deterministic") {
  for (const char* kind : {"t3", "t4", "corollaries", "oracle"}) {
    SuiteOptions o;
    o.kind = kind;
    o.seed = 17;
    o.count = 40;
    const Report a = cmd_random_suite(o);
    const Report b = cmd_random_suite(o);
    CHECK(a.exit_code == kExitOk);
    CHECK(without_timing(a.data).dump() == without_timing(b.data).dump());
    CHECK(a.text == b.text);
  }
}

TEST_CASE("golden example reports") {
  const std::string ex3 = cmd_example("ex3").text;
  CHECK(ex3.find("independent sets (5): {{}, {1}, {2}, {3}, {1,3}}\n"
                 "I.1 HOLDS\n"
                 "I.2 HOLDS\n"
                 "I.3 VIOLATED witness ({2},{1,3})\n"
                 "MATROID: no\n") != std::string::npos);
  const std::string ex2 = cmd_example("ex2").text;
  CHECK(ex2.find("I.3 VIOLATED witness ({2},{1,3})") != std::string::npos);
  CHECK(ex2.find("OUTSIDE") == std::string::npos);
  CHECK(ex2.find("E3 (1, -7/8): (x-1)^2+(y+1)^2 = 1/64 <= 1/9 OK") !=
        std::string::npos);
  CHECK_THROWS_AS(cmd_example("ex4"), ParamError);
}

TEST_CASE("binary exit codes") {
  CHECK(run("example ex3") == 0);
  CHECK(slurp(scratch_dir() / "stdout.txt").find("MATROID: no") != std::string::npos);
  CHECK(run("example ex9") == 2);

  const fs::path bad = write_file(
      "bad.json",
      R"j({"field": "Q", "ambient_dim": 1, "sets": [{"finite": [["1/0"]]}]})j");
  CHECK(run("check-lisf " + bad.string()) == 2);
  CHECK(slurp(scratch_dir() / "stderr.txt").find("parse error") != std::string::npos);
  CHECK(run("check-lisf /nonexistent/file.json") == 2);

  const fs::path shared = write_file("shared.json", kSharedVector);
  CHECK(run("check-lisf " + shared.string()) == 0);
  CHECK(run("check-lisf --budget 1 " + shared.string()) == 3);
  CHECK(slurp(scratch_dir() / "stderr.txt").find("{1,2}") != std::string::npos);
  CHECK(run("build-matroid --oracle " + shared.string()) == 4);
  CHECK(run("greedy " + shared.string() + " --weights 1") == 2);
  CHECK(run("random-suite t4 --n 1") == 2);
  CHECK(run("random-suite t3 --count 20 --seed 3") == 0);
}

TEST_CASE("emitted reports match across runs") {
  const fs::path a = scratch_dir() / "a.json";
  const fs::path b = scratch_dir() / "b.json";
  REQUIRE(run("--emit-report " + a.string() + " random-suite corollaries --count 30 --seed 5") == 0);
  REQUIRE(run("--emit-report " + b.string() + " random-suite corollaries --count 30 --seed 5") == 0);
  const auto ja = without_timing(nlohmann::ordered_json::parse(slurp(a)));
  const auto jb = without_timing(nlohmann::ordered_json::parse(slurp(b)));
  CHECK(ja.dump() == jb.dump());
  CHECK(ja["result"] == "PASS");
}

}  // namespace
}  // namespace lisfmat
