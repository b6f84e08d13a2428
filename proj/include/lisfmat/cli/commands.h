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

#ifndef LISFMAT_CLI_COMMANDS_H_
#define LISFMAT_CLI_COMMANDS_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lisfmat/cli/instance_file.h"
#include "lisfmat/setfamily/lisf.h"

namespace lisfmat {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a suite found a failing instance
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitHypotheses = 4;

// Output of a command: human-readable text plus the same content as a JSON
// document. `data["timing_ms"]` is the only nondeterministic field.
struct Report {
  std::string text;
  nlohmann::ordered_json data;
  int exit_code = kExitOk;
};

struct CheckLisfOptions {
  std::optional<std::uint64_t> sampled_trials;
  std::uint64_t seed = 0;
  LisfOptions lisf;
};

Report cmd_check_lisf(const Instance& instance,
                      const CheckLisfOptions& options);

struct BuildMatroidOptions {
  bool verify_axioms = false;
  bool summary = false;
  bool oracle = false;
  LisfOptions lisf;
};

// Throws HypothesesNotMet when `oracle` is requested for a family that does
// not lie on lines.
Report cmd_build_matroid(const Instance& instance,
                         const BuildMatroidOptions& options);

// "ex2" (disks in Q^2) or "ex3" (punctured planes in Q^3). Throws ParamError
// for other names.
Report cmd_example(const std::string& name);
Instance example_instance(const std::string& name);

Report cmd_greedy(const Instance& instance,
                  const std::vector<mpq_class>& weights,
                  const LisfOptions& lisf = {});

// Parses "3,5,1/2".
std::vector<mpq_class> parse_weights(const std::string& text);

struct SuiteOptions {
  std::string kind;  // "t3", "t4", "corollaries" or "oracle"
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::optional<std::size_t> n;
  std::optional<std::size_t> l;
  std::optional<std::size_t> k;
  std::optional<std::size_t> dim_n;
  std::optional<std::size_t> m;
  std::optional<std::string> field;
  std::size_t greedy_trials = 10;
  std::size_t sampled_trials = 200;
  // Failing instances are written here as replayable instance files; empty
  // disables dumping.
  std::string dump_dir;
};

// Runs `count` generated instances through the invariants of `kind` and
// reports pass counts. exit_code is kExitOk iff every check passed. Throws
// ParamError for unusable parameters.
Report cmd_random_suite(const SuiteOptions& options);

// Renders a dependence witness as one line per set. `labels[i]` names the
// i-th set when the witness comes from a subfamily; by default sets are
// numbered from 1.
std::string format_witness(const DependenceWitness& witness,
                           const std::vector<std::size_t>& labels = {});
nlohmann::ordered_json witness_to_json(const DependenceWitness& witness);

}  // namespace lisfmat

#endif  // LISFMAT_CLI_COMMANDS_H_
