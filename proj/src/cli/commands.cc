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

#include "lisfmat/cli/commands.h"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "lisfmat/constructions/constructions.h"
#include "lisfmat/errors.h"
#include "lisfmat/matroid/matroid.h"

namespace lisfmat {
namespace {

using ojson = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void header(const SetFamily& f, std::ostream& text, ojson& data) {
  text << "family: field " << f.field().to_string() << ", ambient_dim "
       << f.ambient_dim() << ", " << f.size() << " sets\n";
  data["field"] = f.field().to_string();
  data["ambient_dim"] = f.ambient_dim();
  data["num_sets"] = f.size();
}

// The report is the trust boundary: nothing unverified is printed.
void require_verified(const SetFamily& f, const DependenceWitness& w) {
  const std::string problem = explain_witness_failure(f, w);
  if (!problem.empty()) {
    throw std::logic_error("internal error: witness failed verification: " +
                           problem);
  }
}

ojson sets_to_json(std::span<const LabelSet> sets) {
  ojson arr = ojson::array();
  for (LabelSet s : sets) arr.push_back(labels_of(s));
  return arr;
}

ojson pair_to_json(const std::pair<LabelSet, LabelSet>& p) {
  return ojson::array({labels_of(p.first), labels_of(p.second)});
}

std::string pair_text(const std::pair<LabelSet, LabelSet>& p) {
  return "(" + format_set(p.first) + "," + format_set(p.second) + ")";
}

void render_family(const IndependenceFamily& fam, std::ostream& text,
                   ojson& data) {
  text << "independent sets (" << fam.members().size()
       << "): " << fam.to_string() << "\n";
  data["independent_sets"] = sets_to_json(fam.members());
}

void render_axioms(const AxiomReport& r, std::ostream& text, ojson& data) {
  text << "I.1 " << (r.i1_holds ? "HOLDS" : "VIOLATED") << "\n";
  text << "I.2 " << (r.i2_holds ? "HOLDS" : "VIOLATED");
  if (r.i2_witness) text << " witness " << pair_text(*r.i2_witness);
  text << "\n";
  text << "I.3 " << (r.i3_holds ? "HOLDS" : "VIOLATED");
  if (r.i3_witness) text << " witness " << pair_text(*r.i3_witness);
  text << "\n";
  text << "MATROID: " << (r.is_matroid() ? "yes" : "no") << "\n";

  ojson axioms;
  axioms["i1_holds"] = r.i1_holds;
  axioms["i2_holds"] = r.i2_holds;
  axioms["i2_witness"] = r.i2_witness ? pair_to_json(*r.i2_witness) : ojson();
  axioms["i3_holds"] = r.i3_holds;
  axioms["i3_witness"] = r.i3_witness ? pair_to_json(*r.i3_witness) : ojson();
  axioms["is_matroid"] = r.is_matroid();
  data["axioms"] = axioms;
}

void render_summary(const MatroidSummary& s, std::ostream& text, ojson& data) {
  text << "rank: " << s.rank << "\n";
  text << "bases: " << format_sets(s.bases) << "\n";
  text << "circuits: " << format_sets(s.circuits) << "\n";
  data["summary"] = {{"rank", s.rank},
                     {"bases", sets_to_json(s.bases)},
                     {"circuits", sets_to_json(s.circuits)}};
}

std::string indent(const std::string& block, const std::string& pad) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += pad + line + "\n";
  return out;
}

// For an I.3 violation (A, B), shows why every A + e, e in B - A, fails.
void render_exchange_failures(const SetFamily& f,
                              const std::pair<LabelSet, LabelSet>& witness,
                              const LisfOptions& lisf, std::ostream& text,
                              ojson& data) {
  const LabelSet a = witness.first;
  const LabelSet b = witness.second;
  text << "extensions of " << format_set(a) << " by " << format_set(b & ~a)
       << ":\n";
  ojson arr = ojson::array();
  for (std::size_t e : labels_of(b & ~a)) {
    const LabelSet grown = a | label_bit(e);
    const SetFamily sub = f.subfamily(grown);
    const LisfVerdict v = is_lisf(sub, lisf);
    text << "  " << format_set(grown) << ": "
         << (v.is_lisf ? "LISF" : "NOT LISF") << "\n";
    ojson entry = {{"set", labels_of(grown)}, {"is_lisf", v.is_lisf}};
    if (v.witness) {
      require_verified(sub, *v.witness);
      text << indent(format_witness(*v.witness, labels_of(grown)), "    ");
      entry["witness"] = witness_to_json(*v.witness);
    }
    arr.push_back(entry);
  }
  data["exchange_failures"] = arr;
}

std::string shifted(const char* var, const Scalar& center) {
  if (center.is_zero()) return var;
  const Scalar neg = -center;
  const std::string mag = (center.rational() < 0 ? neg : center).to_string();
  return std::string("(") + var + (center.rational() < 0 ? "+" : "-") + mag +
         ")";
}

std::string describe_membership(const Disk& disk, const Vector& p) {
  const Scalar dx = p[0] - disk.center_x;
  const Scalar dy = p[1] - disk.center_y;
  const Scalar d2 = dx * dx + dy * dy;
  return shifted("x", disk.center_x) + "^2+" + shifted("y", disk.center_y) +
         "^2 = " + d2.to_string() +
         " <= " + disk.radius_squared.to_string();
}

}  // namespace

std::string format_witness(const DependenceWitness& witness,
                           const std::vector<std::size_t>& labels) {
  std::string out;
  for (std::size_t i = 0; i < witness.selection.size(); ++i) {
    const std::size_t label = i < labels.size() ? labels[i] : i + 1;
    out += "set " + std::to_string(label) + ": " +
           witness.coefficients[i].to_string() + " * " +
           witness.selection[i].to_string() + "\n";
  }
  return out;
}

ojson witness_to_json(const DependenceWitness& witness) {
  ojson selection = ojson::array();
  for (const Vector& v : witness.selection) selection.push_back(vector_to_json(v));
  ojson coefficients = ojson::array();
  for (const Scalar& c : witness.coefficients) {
    coefficients.push_back(scalar_to_json(c));
  }
  return {{"selection", selection}, {"coefficients", coefficients}};
}

Report cmd_check_lisf(const Instance& instance,
                      const CheckLisfOptions& options) {
  const auto start = Clock::now();
  const SetFamily& f = instance.family;
  Report report;
  std::ostringstream text;
  report.data["command"] = "check-lisf";
  text << "command: check-lisf\n";
  header(f, text, report.data);

  LisfVerdict verdict;
  try {
    verdict = is_lisf(f, options.lisf);
  } catch (const BudgetExceeded&) {
    throw BudgetExceeded(full_set(f.size()), options.lisf.max_selections);
  }
  text << "verdict: " << (verdict.is_lisf ? "LISF" : "NOT LISF") << "\n";
  report.data["is_lisf"] = verdict.is_lisf;
  report.data["verdict"] = verdict.is_lisf ? "LISF" : "NOT LISF";
  if (verdict.witness) {
    require_verified(f, *verdict.witness);
    text << "witness:\n" << indent(format_witness(*verdict.witness), "  ");
    report.data["witness"] = witness_to_json(*verdict.witness);
  }

  if (options.sampled_trials) {
    const SampledVerdict sampled =
        is_lisf_sampled(f, *options.sampled_trials, options.seed);
    std::string agreement;
    if (sampled.dependence_found) {
      require_verified(f, *sampled.witness);
      agreement = verdict.is_lisf ? "CONTRADICTION" : "AGREE";
    } else if (!verdict.is_lisf) {
      agreement = sampled.exhaustive ? "CONTRADICTION" : "INCONCLUSIVE";
    } else {
      agreement = "AGREE";
    }
    text << "sampled: " << sampled.selections_tested << " selections"
         << (sampled.exhaustive ? " (exhaustive)" : "") << ", "
         << (sampled.dependence_found ? "dependence found"
                                      : "no dependence found")
         << ", " << agreement << "\n";
    ojson s = {{"trials", *options.sampled_trials},
               {"seed", options.seed},
               {"selections_tested", sampled.selections_tested},
               {"exhaustive", sampled.exhaustive},
               {"dependence_found", sampled.dependence_found},
               {"agreement", agreement}};
    if (sampled.witness) {
      text << indent(format_witness(*sampled.witness), "  ");
      s["witness"] = witness_to_json(*sampled.witness);
    }
    report.data["sampled"] = s;
    if (agreement == "CONTRADICTION") report.exit_code = kExitFailure;
  }
  report.text = text.str();
  report.data["timing_ms"] = elapsed_ms(start);
  return report;
}

Report cmd_build_matroid(const Instance& instance,
                         const BuildMatroidOptions& options) {
  const auto start = Clock::now();
  const SetFamily& f = instance.family;
  Report report;
  std::ostringstream text;
  report.data["command"] = "build-matroid";
  text << "command: build-matroid\n";
  header(f, text, report.data);

  // Fail early, before any enumeration.
  std::optional<Matrix> directions;
  if (options.oracle) directions = direction_matrix(f);

  const IndependenceFamily fam = lisf_matroid(f, options.lisf);
  render_family(fam, text, report.data);

  if (options.verify_axioms) {
    const AxiomReport axioms = check_axioms(fam);
    render_axioms(axioms, text, report.data);
    if (axioms.i3_witness) {
      render_exchange_failures(f, *axioms.i3_witness, options.lisf, text,
                               report.data);
    }
  }
  if (options.summary) {
    render_summary(summarize(fam), text, report.data);
  }
  if (instance.decomposition) {
    const HypothesisReport h =
        direct_sum_family_hypotheses(f, *instance.decomposition);
    text << "direct-sum hypotheses: "
         << (h.satisfied() ? "satisfied" : "NOT satisfied") << "\n";
    ojson failures = ojson::array();
    for (const auto& [label, reason] : h.failures) {
      text << "  set " << label << ": " << to_string(reason) << "\n";
      failures.push_back({{"set", label}, {"reason", to_string(reason)}});
    }
    report.data["direct_sum_hypotheses"] = {{"satisfied", h.satisfied()},
                                            {"failures", failures}};
  }
  if (directions) {
    const bool equal = vector_matroid(*directions) == fam;
    text << "direction matrix: " << directions->to_string() << "\n";
    text << "ORACLE: " << (equal ? "EQUAL" : "UNEQUAL") << "\n";
    report.data["oracle"] = equal ? "EQUAL" : "UNEQUAL";
    if (!equal) report.exit_code = kExitFailure;
  }
  report.text = text.str();
  report.data["timing_ms"] = elapsed_ms(start);
  return report;
}

Instance example_instance(const std::string& name) {
  if (name == "ex2") return {disk_counterexample_family(), std::nullopt};
  if (name == "ex3") return {plane_counterexample_family(), std::nullopt};
  throw ParamError("unknown example '" + name + "' (expected ex2 or ex3)");
}

Report cmd_example(const std::string& name) {
  const auto start = Clock::now();
  const Instance instance = example_instance(name);
  const SetFamily& f = instance.family;
  Report report;
  std::ostringstream text;
  report.data["command"] = "example " + name;
  text << "command: example " << name << "\n";
  header(f, text, report.data);
  const std::string file = serialize_instance(instance);
  text << "instance:\n" << file;
  report.data["instance"] = ojson::parse(file);

  if (name == "ex2") {
    const std::vector<Disk> disks = counterexample_disks();
    text << "disk membership:\n";
    ojson checks = ojson::array();
    bool all_inside = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (const Vector& p : f[i].vectors()) {
        // E_2 is the disk with the origin removed.
        const bool inside =
            disks[i].contains(p) && !(i == 1 && p.is_zero());
        all_inside = all_inside && inside;
        text << "  E" << i + 1 << " " << p.to_string() << ": "
             << describe_membership(disks[i], p) << " "
             << (inside ? "OK" : "OUTSIDE") << "\n";
        checks.push_back({{"set", i + 1},
                          {"point", vector_to_json(p)},
                          {"inside", inside}});
      }
    }
    report.data["disk_membership"] = checks;
    report.data["all_points_inside"] = all_inside;
    if (!all_inside) report.exit_code = kExitFailure;
  }

  const IndependenceFamily fam = lisf_matroid(f);
  render_family(fam, text, report.data);
  const AxiomReport axioms = check_axioms(fam);
  render_axioms(axioms, text, report.data);
  render_summary(summarize(fam), text, report.data);
  if (axioms.i3_witness) {
    render_exchange_failures(f, *axioms.i3_witness, {}, text, report.data);
  }
  report.text = text.str();
  report.data["timing_ms"] = elapsed_ms(start);
  return report;
}

std::vector<mpq_class> parse_weights(const std::string& text) {
  std::vector<mpq_class> weights;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(',', begin);
    if (end == std::string::npos) end = text.size();
    const Scalar w =
        Scalar::parse(FieldSpec::rationals(), text.substr(begin, end - begin));
    if (sgn(w.rational()) < 0) {
      throw ParamError("weight " + w.to_string() + " is negative");
    }
    weights.push_back(w.rational());
    begin = end + 1;
  }
  return weights;
}

Report cmd_greedy(const Instance& instance,
                  const std::vector<mpq_class>& weights,
                  const LisfOptions& lisf) {
  const auto start = Clock::now();
  const SetFamily& f = instance.family;
  if (weights.size() != f.size()) {
    throw ParamError("expected " + std::to_string(f.size()) +
                     " weights, got " + std::to_string(weights.size()));
  }
  Report report;
  std::ostringstream text;
  report.data["command"] = "greedy";
  text << "command: greedy\n";
  header(f, text, report.data);
  const IndependenceFamily fam = lisf_matroid(f, lisf);
  render_family(fam, text, report.data);
  const WeightedChoice greedy = greedy_max_weight(fam, weights);
  const WeightedChoice best = exhaustive_max_weight(fam, weights);
  const bool agree = greedy.total == best.total;
  text << "greedy: " << format_set(greedy.set) << " total "
       << greedy.total.get_str() << "\n";
  text << "exhaustive: " << format_set(best.set) << " total "
       << best.total.get_str() << "\n";
  text << (agree ? "AGREE" : "DISAGREE") << "\n";
  ojson w = ojson::array();
  for (const mpq_class& x : weights) w.push_back(x.get_str());
  report.data["weights"] = w;
  report.data["greedy"] = {{"set", labels_of(greedy.set)},
                           {"total", greedy.total.get_str()}};
  report.data["exhaustive"] = {{"set", labels_of(best.set)},
                               {"total", best.total.get_str()}};
  report.data["agreement"] = agree ? "AGREE" : "DISAGREE";
  report.text = text.str();
  report.data["timing_ms"] = elapsed_ms(start);
  return report;
}

}  // namespace lisfmat
