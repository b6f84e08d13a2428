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

#include "doctest.h"
#include "lisfmat/errors.h"
#include "lisfmat/matroid/matroid.h"
#include "support/helpers.h"

namespace lisfmat {
namespace {

using namespace testing;

IndependenceFamily fam(std::size_t n,
                       const std::vector<std::vector<std::size_t>>& members) {
  return IndependenceFamily::from_label_lists(n, members);
}

IndependenceFamily example_system() {
  return fam(3, {{}, {1}, {2}, {3}, {1, 3}});
}

std::vector<mpq_class> weights(std::initializer_list<long> ws) {
  std::vector<mpq_class> out;
  for (long w : ws) out.emplace_back(w);
  return out;
}

TEST_CASE("label sets") {
  CHECK(format_set(0) == "{}");
  CHECK(format_set(label_bit(1) | label_bit(3)) == "{1,3}");
  CHECK(canonical_less(label_bit(3), label_bit(1) | label_bit(2)));
  CHECK(canonical_less(label_bit(1) | label_bit(3), label_bit(2) | label_bit(3)));
  CHECK(example_system().to_string() == "{{}, {1}, {2}, {3}, {1,3}}");
  CHECK_THROWS_AS(IndependenceFamily(25, {0}), GroundTooLarge);
  CHECK_THROWS_AS(fam(2, {{3}}), ParamError);
}

TEST_CASE("axioms of the two-block system") {
  const AxiomReport r = check_axioms(example_system());
  CHECK(r.i1_holds);
  CHECK(r.i2_holds);
  CHECK_FALSE(r.i3_holds);
  REQUIRE(r.i3_witness.has_value());
  CHECK(r.i3_witness->first == label_bit(2));
  CHECK(r.i3_witness->second == (label_bit(1) | label_bit(3)));
  CHECK_FALSE(r.is_matroid());
}

TEST_CASE("uniform matroid") {
  const IndependenceFamily u =
      fam(3, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(check_axioms(u).is_matroid());
}

TEST_CASE("missing empty set and downward closure") {
  const AxiomReport r = check_axioms(fam(3, {{1}}));
  CHECK_FALSE(r.i1_holds);
  const AxiomReport d = check_axioms(fam(2, {{}, {1, 2}}));
  CHECK_FALSE(d.i2_holds);
  REQUIRE(d.i2_witness.has_value());
  CHECK(d.i2_witness->first == (label_bit(1) | label_bit(2)));
  CHECK(d.i2_witness->second == label_bit(2));
}

TEST_CASE("summaries") {
  const MatroidSummary s = summarize(example_system());
  CHECK(s.rank == 2);
  CHECK(s.bases == std::vector<LabelSet>{label_bit(2), label_bit(1) | label_bit(3)});
  CHECK(s.circuits == std::vector<LabelSet>{label_bit(1) | label_bit(2),
                                            label_bit(2) | label_bit(3)});

  const MatroidSummary free2 = summarize(fam(2, {{}, {1}, {2}, {1, 2}}));
  CHECK(free2.rank == 2);
  CHECK(free2.bases == std::vector<LabelSet>{label_bit(1) | label_bit(2)});
  CHECK(free2.circuits.empty());

  const MatroidSummary loop = summarize(fam(1, {{}}));
  CHECK(loop.rank == 0);
  CHECK(loop.bases == std::vector<LabelSet>{0});
  CHECK(loop.circuits == std::vector<LabelSet>{label_bit(1)});

  CHECK_THROWS_AS(summarize(fam(2, {{}, {1, 2}})), NotDownwardClosed);
}

TEST_CASE("vector matroids") {
  CHECK(vector_matroid(Matrix::identity(Q(), 2)) ==
        fam(2, {{}, {1}, {2}, {1, 2}}));
  CHECK(vector_matroid(Matrix::of(Q(), {{1, 0, 1}, {0, 1, 1}})) ==
        fam(3, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}));
  const IndependenceFamily loop =
      vector_matroid(Matrix::of(GF(3), {{1, 0, 2}, {0, 0, 1}}));
  for (LabelSet s : loop.members()) CHECK((s & label_bit(2)) == 0);
  CHECK_THROWS_AS(vector_matroid(Matrix(Q(), 2, 0)), ParamError);
}

TEST_CASE("greedy and exhaustive selection") {
  const std::vector<mpq_class> w = weights({3, 5, 3});
  const WeightedChoice g = greedy_max_weight(example_system(), w);
  CHECK(g.set == label_bit(2));
  CHECK(g.total == 5);
  const WeightedChoice x = exhaustive_max_weight(example_system(), w);
  CHECK(x.set == (label_bit(1) | label_bit(3)));
  CHECK(x.total == 6);

  const IndependenceFamily free2 = fam(2, {{}, {1}, {2}, {1, 2}});
  CHECK(greedy_max_weight(free2, weights({1, 2})).set == full_set(2));
  CHECK(greedy_max_weight(free2, weights({1, 2})).total == 3);
  CHECK(exhaustive_max_weight(free2, weights({4, 7})).set == full_set(2));

  const WeightedChoice zero = greedy_max_weight(example_system(), weights({0, 0, 0}));
  CHECK(zero.total == 0);
  const WeightedChoice only_empty = exhaustive_max_weight(fam(2, {{}}), weights({1, 1}));
  CHECK(only_empty.set == 0);
  CHECK(only_empty.total == 0);

  CHECK_THROWS_AS(greedy_max_weight(free2, weights({1})), ParamError);
  CHECK_THROWS_AS(exhaustive_max_weight(free2, weights({1, -1})), ParamError);
}

TEST_CASE("relabeling") {
  const std::vector<std::size_t> perm = {3, 1, 2};
  const IndependenceFamily p = permute_labels(example_system(), perm);
  CHECK(p == fam(3, {{}, {1}, {2}, {3}, {2, 3}}));
}

}  // namespace
}  // namespace lisfmat
