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

// lisfmat: decide linear independence of set families, build the induced
// independence systems and run the randomized property suites.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lisfmat/cli/commands.h"
#include "lisfmat/errors.h"
#include "lisfmat/matroid/independence_family.h"

namespace {

using namespace lisfmat;

int emit(const Report& report, const std::string& report_path) {
  std::cout << report.text;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write report to '" << report_path << "'\n";
      return kExitInput;
    }
    out << report.data.dump(2) << "\n";
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linearly independent set families and their matroids"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--emit-report", report_path,
                 "Write the JSON form of the report to this path");

  std::string file;
  std::uint64_t budget = LisfOptions{}.max_selections;

  CheckLisfOptions check;
  std::uint64_t sampled = 0;
  auto* check_cmd =
      app.add_subcommand("check-lisf", "Decide whether a family is LISF");
  check_cmd->add_option("file", file, "Instance file")->required();
  check_cmd->add_option("--sampled", sampled,
                        "Also run the sampled oracle with this many trials");
  check_cmd->add_option("--seed", check.seed, "Seed for the sampled oracle");
  check_cmd->add_option("--budget", budget,
                        "Search-node budget for the decision procedure");

  BuildMatroidOptions build;
  auto* build_cmd = app.add_subcommand(
      "build-matroid", "List the LISF subfamilies of a family");
  build_cmd->add_option("file", file, "Instance file")->required();
  build_cmd->add_flag("--verify-axioms", build.verify_axioms,
                      "Check the independence axioms");
  build_cmd->add_flag("--summary", build.summary,
                      "Print rank, bases and circuits");
  build_cmd->add_flag("--oracle", build.oracle,
                      "Compare with the vector matroid of the directions");
  build_cmd->add_option("--budget", budget,
                        "Search-node budget per subfamily");

  std::string example_name;
  auto* example_cmd =
      app.add_subcommand("example", "Reproduce a worked example");
  example_cmd->add_option("name", example_name, "ex2 or ex3")
      ->required()
      ->check(CLI::IsMember({"ex2", "ex3"}));

  SuiteOptions suite;
  auto* suite_cmd =
      app.add_subcommand("random-suite", "Run a randomized property suite");
  suite_cmd->add_option("kind", suite.kind, "t3, t4, corollaries or oracle")
      ->required()
      ->check(CLI::IsMember({"t3", "t4", "corollaries", "oracle"}));
  suite_cmd->add_option("--seed", suite.seed, "Base seed");
  suite_cmd->add_option("--count", suite.count, "Number of instances");
  suite_cmd->add_option("--n", suite.n,
                        "Maximum family size (t3, corollaries, oracle) or "
                        "summand dimension (t4)");
  suite_cmd->add_option("--l", suite.l, "Maximum ambient dimension");
  suite_cmd->add_option("--k", suite.k, "Maximum number of summands (t4)");
  suite_cmd->add_option("--dim-n", suite.dim_n, "Summand dimension (t4)");
  suite_cmd->add_option("--m", suite.m, "Maximum family size (t4)");
  suite_cmd->add_option("--field", suite.field, "Q or GF(p)");
  suite_cmd->add_option("--greedy-trials", suite.greedy_trials,
                        "Random weight vectors per matroid");
  suite_cmd->add_option("--sampled-trials", suite.sampled_trials,
                        "Sampled-oracle trials per instance (oracle)");
  suite_cmd->add_option("--dump-dir", suite.dump_dir,
                        "Write failing instances here");

  std::string weights_text;
  auto* greedy_cmd = app.add_subcommand(
      "greedy", "Compare greedy and exhaustive maximum-weight selection");
  greedy_cmd->add_option("file", file, "Instance file")->required();
  greedy_cmd->add_option("--weights", weights_text,
                         "Comma-separated nonnegative weights, e.g. 3,5,1/2")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    LisfOptions lisf;
    lisf.max_selections = budget;
    Report report;
    if (*check_cmd) {
      if (check_cmd->count("--sampled") > 0) check.sampled_trials = sampled;
      check.lisf = lisf;
      report = cmd_check_lisf(load_instance(file), check);
    } else if (*build_cmd) {
      build.lisf = lisf;
      report = cmd_build_matroid(load_instance(file), build);
    } else if (*example_cmd) {
      report = cmd_example(example_name);
    } else if (*suite_cmd) {
      report = cmd_random_suite(suite);
    } else {
      report = cmd_greedy(load_instance(file), parse_weights(weights_text),
                          lisf);
    }
    return emit(report, report_path);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " while deciding subfamily "
              << format_set(e.subset()) << "\n";
    return kExitBudget;
  } catch (const HypothesesNotMet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypotheses;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    // Parameter, field, dimension and size errors all stem from the input.
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}
