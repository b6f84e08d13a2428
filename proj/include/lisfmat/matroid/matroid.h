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

#ifndef LISFMAT_MATROID_MATROID_H_
#define LISFMAT_MATROID_MATROID_H_

#include <gmpxx.h>

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lisfmat/exactalg/linalg.h"
#include "lisfmat/matroid/independence_family.h"

namespace lisfmat {

// Verdicts for the independence axioms
//   I.1  {} is a member,
//   I.2  members are closed under taking subsets,
//   I.3  |A| < |B| for members A, B implies A + e is a member for some
//        e in B - A,
// with the canonically least violation for each failed axiom.
struct AxiomReport {
  bool i1_holds = true;
  bool i2_holds = true;
  // (I, I') with I a member, I' = I - {e} not a member.
  std::optional<std::pair<LabelSet, LabelSet>> i2_witness;
  bool i3_holds = true;
  // (I1, I2) with |I1| < |I2| and no e in I2 - I1 extending I1.
  std::optional<std::pair<LabelSet, LabelSet>> i3_witness;

  bool is_matroid() const { return i1_holds && i2_holds && i3_holds; }
};

// Exhaustive scan. Witnesses are least in canonical order: I.2 over members,
// then removed label ascending; I.3 over (I1, I2) pairs.
AxiomReport check_axioms(const IndependenceFamily& family);

struct MatroidSummary {
  std::size_t rank = 0;
  std::vector<LabelSet> bases;     // inclusion-maximal members
  std::vector<LabelSet> circuits;  // inclusion-minimal non-members
};

// Throws NotDownwardClosed if I.1 or I.2 fails.
MatroidSummary summarize(const IndependenceFamily& family);

// Members are the column subsets of `a` that are linearly independent.
// Throws ParamError for a matrix without columns, GroundTooLarge beyond
// kMaxGroundSize columns.
IndependenceFamily vector_matroid(const Matrix& a);

struct WeightedChoice {
  LabelSet set = 0;
  mpq_class total;
};

// Labels by decreasing weight, ties by ascending label; a label is kept when
// the enlarged set is still a member. Throws ParamError when the weight
// count differs from n or a weight is negative.
WeightedChoice greedy_max_weight(const IndependenceFamily& family,
                                 std::span<const mpq_class> weights);
// Best member by total weight; ties go to the canonically least member.
WeightedChoice exhaustive_max_weight(const IndependenceFamily& family,
                                     std::span<const mpq_class> weights);

}  // namespace lisfmat

#endif  // LISFMAT_MATROID_MATROID_H_
