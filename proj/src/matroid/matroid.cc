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

#include "lisfmat/matroid/matroid.h"

#include <algorithm>
#include <numeric>

#include "lisfmat/errors.h"

namespace lisfmat {
namespace {

// Labels e outside s with s + e a member.
LabelSet extensions(const IndependenceFamily& family, LabelSet s) {
  LabelSet ext = 0;
  for (std::size_t label = 1; label <= family.ground_size(); ++label) {
    const LabelSet bit = label_bit(label);
    if ((s & bit) == 0 && family.contains(s | bit)) ext |= bit;
  }
  return ext;
}

bool all_one_removed_members(const IndependenceFamily& family, LabelSet s) {
  for (LabelSet rest = s; rest != 0; rest &= rest - 1) {
    if (!family.contains(s & ~(rest & -rest))) return false;
  }
  return true;
}

void require_weights(const IndependenceFamily& family,
                     std::span<const mpq_class> weights) {
  if (weights.size() != family.ground_size()) {
    throw ParamError("expected " + std::to_string(family.ground_size()) +
                     " weights, got " + std::to_string(weights.size()));
  }
  for (const mpq_class& w : weights) {
    if (sgn(w) < 0) throw ParamError("weights must be non-negative");
  }
}

mpq_class weight_of(LabelSet s, std::span<const mpq_class> weights) {
  mpq_class total = 0;
  for (std::size_t label : labels_of(s)) total += weights[label - 1];
  return total;
}

}  // namespace

AxiomReport check_axioms(const IndependenceFamily& family) {
  AxiomReport report;
  report.i1_holds = family.contains(0);

  for (LabelSet s : family.members()) {
    for (LabelSet rest = s; rest != 0; rest &= rest - 1) {
      const LabelSet smaller = s & ~(rest & -rest);
      if (!family.contains(smaller)) {
        report.i2_holds = false;
        report.i2_witness = {s, smaller};
        break;
      }
    }
    if (!report.i2_holds) break;
  }

  const auto& members = family.members();
  for (std::size_t a = 0; a < members.size() && report.i3_holds; ++a) {
    const LabelSet small = members[a];
    const LabelSet ext = extensions(family, small);
    const std::size_t size = cardinality(small);
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const LabelSet large = members[b];
      if (cardinality(large) <= size) continue;
      if ((large & ~small & ext) == 0) {
        report.i3_holds = false;
        report.i3_witness = {small, large};
        break;
      }
    }
  }
  return report;
}

MatroidSummary summarize(const IndependenceFamily& family) {
  const AxiomReport axioms = check_axioms(family);
  if (!axioms.i1_holds || !axioms.i2_holds) throw NotDownwardClosed();

  MatroidSummary summary;
  for (LabelSet s : family.members()) {
    summary.rank = std::max(summary.rank, cardinality(s));
    if (extensions(family, s) == 0) summary.bases.push_back(s);
  }
  const LabelSet universe = full_set(family.ground_size());
  for (LabelSet s = 1; s != 0 && s <= universe; ++s) {
    if (!family.contains(s) && all_one_removed_members(family, s)) {
      summary.circuits.push_back(s);
    }
  }
  std::sort(summary.circuits.begin(), summary.circuits.end(), canonical_less);
  return summary;
}

IndependenceFamily vector_matroid(const Matrix& a) {
  const std::size_t n = a.cols();
  if (n == 0) throw ParamError("matrix has no columns");
  if (n > kMaxGroundSize) throw GroundTooLarge(n);
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < n; ++c) columns.push_back(a.column(c));

  // Numeric order visits every proper subset before its supersets.
  const LabelSet universe = full_set(n);
  std::vector<bool> independent(std::size_t{universe} + 1, false);
  std::vector<LabelSet> members = {0};
  independent[0] = true;
  std::vector<Vector> chosen;
  for (LabelSet s = 1; s <= universe; ++s) {
    bool candidate = true;
    for (LabelSet rest = s; rest != 0 && candidate; rest &= rest - 1) {
      candidate = independent[s & ~(rest & -rest)];
    }
    if (!candidate) continue;
    chosen.clear();
    for (std::size_t label : labels_of(s)) chosen.push_back(columns[label - 1]);
    if (is_linearly_independent(chosen)) {
      independent[s] = true;
      members.push_back(s);
    }
  }
  return IndependenceFamily(n, std::move(members));
}

WeightedChoice greedy_max_weight(const IndependenceFamily& family,
                                 std::span<const mpq_class> weights) {
  require_weights(family, weights);
  std::vector<std::size_t> order(family.ground_size());
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return weights[x - 1] > weights[y - 1];
                   });
  WeightedChoice choice;
  for (std::size_t label : order) {
    const LabelSet grown = choice.set | label_bit(label);
    if (family.contains(grown)) choice.set = grown;
  }
  choice.total = weight_of(choice.set, weights);
  return choice;
}

WeightedChoice exhaustive_max_weight(const IndependenceFamily& family,
                                     std::span<const mpq_class> weights) {
  require_weights(family, weights);
  WeightedChoice best;
  bool found = false;
  for (LabelSet s : family.members()) {
    mpq_class total = weight_of(s, weights);
    if (!found || total > best.total) {
      best = {s, total};
      found = true;
    }
  }
  return best;
}

}  // namespace lisfmat
