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

// Property suites over generated instances. Every instance i is generated
// from derive_seed(seed, i), so a single failing index can be replayed.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "lisfmat/cli/commands.h"
#include "lisfmat/constructions/constructions.h"
#include "lisfmat/errors.h"
#include "lisfmat/matroid/matroid.h"

namespace lisfmat {
namespace {

using ojson = nlohmann::ordered_json;

// Results of one generated instance. `checks` lists (name, passed) in a
// fixed order per suite kind; `applicable` false means the check was
// skipped for this instance.
struct Check {
  std::string name;
  bool applicable = true;
  bool passed = true;
};

struct Outcome {
  std::vector<Check> checks;
  std::optional<Instance> instance;
  std::string note;

  bool failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const Check& c) {
      return c.applicable && !c.passed;
    });
  }
};

std::vector<mpq_class> random_weights(std::size_t n, Rng& rng) {
  std::vector<mpq_class> w;
  for (std::size_t i = 0; i < n; ++i) {
    w.emplace_back(mpz_class(static_cast<long>(rng.uniform(0, 9))),
                   mpz_class(static_cast<long>(rng.uniform(1, 3))));
    w.back().canonicalize();
  }
  return w;
}

bool greedy_agrees(const IndependenceFamily& fam, std::size_t trials,
                   Rng& rng) {
  for (std::size_t t = 0; t < trials; ++t) {
    const std::vector<mpq_class> w = random_weights(fam.ground_size(), rng);
    if (greedy_max_weight(fam, w).total != exhaustive_max_weight(fam, w).total) {
      return false;
    }
  }
  return true;
}

FieldSpec cycle_field(const std::vector<FieldSpec>& fields, std::size_t i) {
  return fields[i % fields.size()];
}

std::vector<FieldSpec> suite_fields(const std::optional<std::string>& given,
                                    std::vector<FieldSpec> defaults) {
  if (given) return {FieldSpec::parse(*given)};
  return defaults;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo),
                                              static_cast<std::int64_t>(hi)));
}

std::size_t require_range(std::size_t value, std::size_t lo, std::size_t hi,
                          const char* flag) {
  if (value < lo || value > hi) {
    throw ParamError(std::string("--") + flag + " must be in [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return value;
}

using InstanceRunner = std::function<Outcome(std::size_t index, Rng& rng)>;

InstanceRunner line_suite(const SuiteOptions& o) {
  const std::size_t n_max = require_range(o.n.value_or(8), 1, kMaxGroundSize, "n");
  const std::size_t l_max = require_range(o.l.value_or(6), 1, 64, "l");
  const std::vector<FieldSpec> fields =
      suite_fields(o.field, {FieldSpec::rationals(), FieldSpec::prime(5),
                             FieldSpec::prime(7)});
  const std::size_t greedy_trials = o.greedy_trials;
  return [=](std::size_t index, Rng& rng) {
    LineFamilyParams p;
    p.seed = rng.split().uniform(0, INT64_MAX);
    p.n = pick(rng, 1, n_max);
    p.l = pick(rng, 1, l_max);
    p.field = cycle_field(fields, index);
    p.samples_per_set = pick(rng, 1, 3);
    p.loop_probability = 0.1;
    const SetFamily f = random_line_family(p);
    const IndependenceFamily fam = lisf_matroid(f);
    const AxiomReport axioms = check_axioms(fam);
    Outcome out;
    out.checks.push_back(
        {"hypotheses", true, line_family_hypotheses(f).satisfied()});
    out.checks.push_back({"I.1+I.2", true, axioms.i1_holds && axioms.i2_holds});
    out.checks.push_back({"matroid", true, axioms.is_matroid()});
    out.checks.push_back(
        {"oracle-equal", true, vector_matroid(direction_matrix(f)) == fam});
    out.checks.push_back({"greedy-agree", axioms.is_matroid(),
                          axioms.is_matroid() &&
                              greedy_agrees(fam, greedy_trials, rng)});
    out.instance = Instance{f, std::nullopt};
    return out;
  };
}

InstanceRunner direct_sum_suite(const SuiteOptions& o) {
  if (o.field && FieldSpec::parse(*o.field) != FieldSpec::rationals()) {
    throw ParamError("the direct-sum suite requires --field Q");
  }
  if (o.n && o.dim_n && *o.n != *o.dim_n) {
    throw ParamError("--n and --dim-n disagree");
  }
  const std::optional<std::size_t> fixed_n = o.dim_n ? o.dim_n : o.n;
  const std::size_t k_max = require_range(o.k.value_or(4), 1, 64, "k");
  const std::size_t m_max = require_range(o.m.value_or(8), 1, kMaxGroundSize, "m");
  const std::size_t l_max = require_range(o.l.value_or(12), 1, 64, "l");
  std::vector<std::size_t> dims;
  if (fixed_n) {
    if (*fixed_n < 2) {
      throw ParamError("summand dimension n = " + std::to_string(*fixed_n) +
                       " leaves the range ceil(n/2)+1 .. n empty; need n >= 2");
    }
    if (*fixed_n > l_max) {
      throw ParamError("summand dimension exceeds --l; k * n <= l impossible");
    }
    dims = {*fixed_n};
  } else {
    for (std::size_t d : {2, 3, 4}) {
      if (d <= l_max) dims.push_back(d);
    }
    if (dims.empty()) throw ParamError("--l must be at least 2");
  }
  const std::size_t greedy_trials = o.greedy_trials;
  return [=](std::size_t, Rng& rng) {
    DirectSumFamilyParams p;
    p.seed = rng.split().uniform(0, INT64_MAX);
    p.n = dims[rng.index(dims.size())];
    p.k = pick(rng, 1, std::min(k_max, l_max / p.n));
    p.l = pick(rng, p.k * p.n, l_max);
    p.m = pick(rng, 1, m_max);
    auto [f, decomposition] = random_direct_sum_family(p);
    const IndependenceFamily fam = lisf_matroid(f);
    const AxiomReport axioms = check_axioms(fam);
    Outcome out;
    out.checks.push_back(
        {"hypotheses", true,
         direct_sum_family_hypotheses(f, decomposition).satisfied()});
    out.checks.push_back({"I.1+I.2", true, axioms.i1_holds && axioms.i2_holds});
    out.checks.push_back({"matroid", true, axioms.is_matroid()});
    out.checks.push_back({"greedy-agree", axioms.is_matroid(),
                          axioms.is_matroid() &&
                              greedy_agrees(fam, greedy_trials, rng)});
    out.instance = Instance{std::move(f), std::move(decomposition)};
    return out;
  };
}

InstanceRunner invariance_suite(const SuiteOptions& o) {
  const std::size_t n_max = require_range(o.n.value_or(5), 1, kMaxGroundSize, "n");
  const std::size_t l_max = require_range(o.l.value_or(4), 1, 64, "l");
  const std::vector<FieldSpec> fields = suite_fields(
      o.field, {FieldSpec::rationals(), FieldSpec::prime(2),
                FieldSpec::prime(5), FieldSpec::prime(7)});
  return [=](std::size_t index, Rng& rng) {
    MixedFamilyParams p;
    p.seed = rng.split().uniform(0, INT64_MAX);
    p.n = pick(rng, 1, n_max);
    p.l = pick(rng, 1, l_max);
    p.field = cycle_field(fields, index);
    p.max_set_size = 3;
    p.punctured_probability = 0.2;
    p.zero_probability = 0.05;
    const SetFamily f = random_mixed_family(p);

    std::vector<Scalar> lambdas;
    for (std::size_t i = 0; i < f.size(); ++i) {
      lambdas.push_back(random_nonzero_scalar(f.field(), rng, 5, true));
    }
    const Matrix t = random_invertible_matrix(f.field(), f.ambient_dim(), rng, 3);

    const IndependenceFamily fam = lisf_matroid(f);
    const IndependenceFamily scaled = lisf_matroid(scale_family(f, lambdas));
    const IndependenceFamily mapped = lisf_matroid(apply_isomorphism(f, t));
    const IndependenceFamily symmetric = lisf_matroid(symmetrize(f));
    auto structural = [](const IndependenceFamily& x) {
      const AxiomReport r = check_axioms(x);
      return r.i1_holds && r.i2_holds;
    };
    Outcome out;
    out.checks.push_back(
        {"line-hypotheses", false, line_family_hypotheses(f).satisfied()});
    out.checks.push_back({"I.1+I.2", true,
                          structural(fam) && structural(scaled) &&
                              structural(mapped) && structural(symmetric)});
    out.checks.push_back({"scale-invariant", true, scaled == fam});
    out.checks.push_back({"isomorphism-invariant", true, mapped == fam});
    out.checks.push_back({"symmetrize-invariant", true, symmetric == fam});
    out.instance = Instance{f, std::nullopt};
    return out;
  };
}

InstanceRunner oracle_suite(const SuiteOptions& o) {
  const std::size_t n_max = require_range(o.n.value_or(5), 1, kMaxGroundSize, "n");
  const std::size_t l_max = require_range(o.l.value_or(4), 1, 64, "l");
  const std::vector<FieldSpec> fields = suite_fields(
      o.field, {FieldSpec::rationals(), FieldSpec::prime(2),
                FieldSpec::prime(3), FieldSpec::prime(5)});
  const std::uint64_t sampled_trials = o.sampled_trials;
  return [=](std::size_t index, Rng& rng) {
    MixedFamilyParams p;
    p.seed = rng.split().uniform(0, INT64_MAX);
    p.n = pick(rng, 1, n_max);
    p.l = pick(rng, 1, l_max);
    p.field = cycle_field(fields, index);
    p.max_set_size = 4;
    p.punctured_probability = (index % 2 == 0) ? 0.0 : 0.5;
    p.zero_probability = 0.05;
    p.coeff_bound = 1;
    const SetFamily f = random_mixed_family(p);

    const LisfVerdict symbolic = is_lisf(f);
    const bool all_finite =
        std::all_of(f.sets().begin(), f.sets().end(),
                    [](const VectorSet& s) { return s.is_finite(); });
    std::uint64_t product = 1;
    for (const VectorSet& s : f.sets()) {
      if (s.is_finite()) product *= s.vectors().size();
    }
    const bool exhaustive = all_finite && product <= 100'000;
    const SampledVerdict oracle =
        is_lisf_sampled(f, exhaustive ? product : sampled_trials,
                        rng.split().uniform(0, INT64_MAX));

    bool consistent = true;
    if (oracle.dependence_found && symbolic.is_lisf) consistent = false;
    if (exhaustive && !oracle.dependence_found && !symbolic.is_lisf) {
      consistent = false;
    }
    bool witnesses_ok = true;
    if (symbolic.witness) witnesses_ok = verify_witness(f, *symbolic.witness);
    if (oracle.witness) {
      witnesses_ok = witnesses_ok && verify_witness(f, *oracle.witness);
    }
    const IndependenceFamily fam = lisf_matroid(f);
    const AxiomReport axioms = check_axioms(fam);

    Outcome out;
    out.checks.push_back({"exhaustive-agree", exhaustive, consistent});
    out.checks.push_back({"sampled-no-contradiction", !exhaustive, consistent});
    // Not finding a dependence by sampling is not a failure; tallied only.
    out.checks.push_back(
        {"sampled-found-dependence", false,
         !exhaustive && !symbolic.is_lisf && oracle.dependence_found});
    out.checks.push_back({"witnesses-verified", true, witnesses_ok});
    out.checks.push_back({"I.1+I.2", true, axioms.i1_holds && axioms.i2_holds});
    out.instance = Instance{f, std::nullopt};
    return out;
  };
}

std::string dump_failure(const SuiteOptions& o, std::size_t index,
                         const Instance& instance) {
  if (o.dump_dir.empty()) return {};
  std::filesystem::create_directories(o.dump_dir);
  const std::filesystem::path path =
      std::filesystem::path(o.dump_dir) /
      (o.kind + "-seed" + std::to_string(o.seed) + "-" +
       std::to_string(index) + ".json");
  std::ofstream(path) << serialize_instance(instance);
  return path.string();
}

}  // namespace

Report cmd_random_suite(const SuiteOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  InstanceRunner runner;
  if (o.kind == "t3") {
    runner = line_suite(o);
  } else if (o.kind == "t4") {
    runner = direct_sum_suite(o);
  } else if (o.kind == "corollaries") {
    runner = invariance_suite(o);
  } else if (o.kind == "oracle") {
    runner = oracle_suite(o);
  } else {
    throw ParamError("unknown suite '" + o.kind +
                     "' (expected t3, t4, corollaries or oracle)");
  }
  if (o.count == 0) throw ParamError("--count must be positive");

  // Instances are independent; run them on a few threads and aggregate by
  // index so the report does not depend on scheduling.
  std::vector<Outcome> outcomes(o.count);
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < o.count; i += workers) {
          Rng rng(derive_seed(o.seed, i));
          outcomes[i] = runner(i, rng);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Report report;
  std::ostringstream text;
  report.data["command"] = "random-suite " + o.kind;
  report.data["seed"] = o.seed;
  report.data["count"] = o.count;
  text << "command: random-suite " << o.kind << "\n";
  text << "seed " << o.seed << ", count " << o.count << "\n";

  std::vector<std::string> names;
  for (const Check& c : outcomes.front().checks) names.push_back(c.name);
  std::vector<std::size_t> passed(names.size(), 0);
  std::vector<std::size_t> applicable(names.size(), 0);
  std::vector<std::size_t> observed(names.size(), 0);
  ojson failures = ojson::array();
  for (std::size_t i = 0; i < o.count; ++i) {
    const Outcome& out = outcomes[i];
    for (std::size_t c = 0; c < out.checks.size(); ++c) {
      if (out.checks[c].passed) ++observed[c];
      if (!out.checks[c].applicable) continue;
      ++applicable[c];
      if (out.checks[c].passed) ++passed[c];
    }
    if (out.failed()) {
      ojson failure = {{"index", i}, {"seed", derive_seed(o.seed, i)}};
      ojson failed_checks = ojson::array();
      for (const Check& c : out.checks) {
        if (c.applicable && !c.passed) failed_checks.push_back(c.name);
      }
      failure["checks"] = failed_checks;
      const std::string path = dump_failure(o, i, *out.instance);
      if (!path.empty()) failure["dump"] = path;
      failures.push_back(failure);
    }
  }

  ojson counts;
  for (std::size_t c = 0; c < names.size(); ++c) {
    // Checks that are never applicable are informational tallies.
    const bool informational = applicable[c] == 0;
    if (informational) {
      text << names[c] << ": " << observed[c] << "/" << o.count
           << " (informational)\n";
      counts[names[c]] = {{"observed", observed[c]}, {"of", o.count}};
    } else {
      text << names[c] << ": " << passed[c] << "/" << applicable[c] << "\n";
      counts[names[c]] = {{"passed", passed[c]}, {"of", applicable[c]}};
    }
  }
  report.data["checks"] = counts;
  report.data["failures"] = failures;

  auto find = [&](const std::string& name) {
    const auto it = std::find(names.begin(), names.end(), name);
    return static_cast<std::size_t>(it - names.begin());
  };
  if (o.kind == "t3") {
    text << passed[find("matroid")] << "/" << o.count << " matroid, "
         << passed[find("oracle-equal")] << "/" << o.count
         << " oracle-equal\n";
  }
  text << "failures: " << failures.size() << "\n";
  text << "RESULT: " << (failures.empty() ? "PASS" : "FAIL") << "\n";
  report.data["result"] = failures.empty() ? "PASS" : "FAIL";
  report.exit_code = failures.empty() ? kExitOk : kExitFailure;
  report.text = text.str();
  report.data["timing_ms"] =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace lisfmat
