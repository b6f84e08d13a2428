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
#include "lisfmat/setfamily/lisf.h"
#include "support/helpers.h"

namespace lisfmat {
namespace {

using namespace testing;

TEST_CASE("vector sets") {
  const VectorSet s = fin({Vector::of(Q(), {1, 0}), Vector::of(Q(), {1, 0}),
                           Vector::of(Q(), {0, 1})});
  CHECK(s.vectors().size() == 2);
  CHECK_THROWS_AS(VectorSet::finite({}), ParamError);
  CHECK_THROWS_AS(VectorSet::punctured(Subspace::zero(Q(), 2)), ZeroSubspace);
  const VectorSet p = punc(Q(), 2, {e(Q(), 2, 0)});
  CHECK(p.contains(Vector::of(Q(), {3, 0})));
  CHECK_FALSE(p.contains(Vector::of(Q(), {0, 0})));
  CHECK_FALSE(p.contains_zero());
  CHECK(fin({Vector::of(Q(), {0, 0})}).contains_zero());
}

TEST_CASE("set family validation") {
  CHECK_THROWS_AS(SetFamily(Q(), 2, {fin({Vector::of(GF(5), {1, 0})})}),
                  FieldMismatch);
  CHECK_THROWS_AS(SetFamily(Q(), 2, {fin({Vector::of(Q(), {1, 0, 0})})}),
                  DimensionMismatch);
  const SetFamily f(Q(), 2,
                    {fin({Vector::of(Q(), {1, 0})}),
                     fin({Vector::of(Q(), {0, 1})}),
                     fin({Vector::of(Q(), {1, 1})})});
  const SetFamily sub = f.subfamily(0b101);
  CHECK(sub.size() == 2);
  CHECK(sub[1] == f[2]);
}

TEST_CASE("directions") {
  const Directions a = directions(fin({Vector::of(Q(), {2, 0}),
                                       Vector::of(Q(), {3, 0}),
                                       Vector::of(Q(), {0, 0})}));
  CHECK(a.dirs == std::vector<Vector>{Vector::of(Q(), {1, 0})});
  CHECK(a.contains_zero);

  const Directions b =
      directions(fin({Vector::of(Q(), {1, 1}), Vector::of(Q(), {-2, -2})}));
  CHECK(b.dirs == std::vector<Vector>{Vector::of(Q(), {1, 1})});
  CHECK_FALSE(b.contains_zero);

  const FieldSpec f = GF(3);
  const Directions c =
      directions(fin({Vector::of(f, {1, 2}), Vector::of(f, {2, 1})}));
  CHECK(c.dirs == std::vector<Vector>{Vector::of(f, {1, 2})});
}

TEST_CASE("is_lisf on quadrant samples") {
  const SetFamily f(Q(), 2,
                    {fin({Vector::of(Q(), {1, 1}), Vector::of(Q(), {2, 1})}),
                     fin({Vector::of(Q(), {1, -1}), Vector::of(Q(), {1, -2})})});
  const LisfVerdict v = is_lisf(f);
  CHECK(v.is_lisf);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("is_lisf with a shared vector") {
  const SetFamily f(
      Q(), 3,
      {fin({Vector::of(Q(), {1, 1, 0})}),
       fin({Vector::of(Q(), {1, 1, 0}), Vector::of(Q(), {0, 0, 1})})});
  const LisfVerdict v = is_lisf(f);
  REQUIRE_FALSE(v.is_lisf);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->selection == std::vector<Vector>{Vector::of(Q(), {1, 1, 0}),
                                                    Vector::of(Q(), {1, 1, 0})});
  CHECK(v.witness->coefficients ==
        std::vector<Scalar>{sc(Q(), "1"), sc(Q(), "-1")});
  CHECK(verify_witness(f, *v.witness));
}

TEST_CASE("is_lisf on punctured coordinate summands") {
  const SetFamily ok(Q(), 3,
                     {punc(Q(), 3, {e(Q(), 3, 0)}),
                      punc(Q(), 3, {e(Q(), 3, 1), e(Q(), 3, 2)})});
  CHECK(is_lisf(ok).is_lisf);

  const SetFamily bad(Q(), 3,
                      {punc(Q(), 3, {e(Q(), 3, 0)}),
                       punc(Q(), 3, {e(Q(), 3, 0), e(Q(), 3, 1)})});
  const LisfVerdict v = is_lisf(bad);
  REQUIRE_FALSE(v.is_lisf);
  CHECK(verify_witness(bad, *v.witness));
}

TEST_CASE("zero vector makes a family dependent") {
  const SetFamily f(Q(), 2,
                    {fin({Vector::of(Q(), {1, 0})}),
                     fin({Vector::of(Q(), {0, 1}), Vector::of(Q(), {0, 0})})});
  const LisfVerdict v = is_lisf(f);
  REQUIRE_FALSE(v.is_lisf);
  CHECK(v.witness->selection[1].is_zero());
  CHECK(v.witness->coefficients[0].is_zero());
  CHECK(v.witness->coefficients[1].is_one());
  CHECK(verify_witness(f, *v.witness));
}

TEST_CASE("more sets than dimensions") {
  const SetFamily f(Q(), 1,
                    {fin({Vector::of(Q(), {1})}), fin({Vector::of(Q(), {2})})});
  const LisfVerdict v = is_lisf(f);
  REQUIRE_FALSE(v.is_lisf);
  CHECK(verify_witness(f, *v.witness));
}

TEST_CASE("empty family is vacuously independent") {
  const SetFamily f(Q(), 2, {});
  CHECK(is_lisf(f).is_lisf);
  const SampledVerdict s = is_lisf_sampled(f, 10, 1);
  CHECK_FALSE(s.dependence_found);
}

TEST_CASE("budget is enforced") {
  std::vector<VectorSet> sets;
  for (std::size_t i = 0; i < 6; ++i) {
    Vector lifted = e(Q(), 7, i);
    lifted.add_scaled(Scalar::one(Q()), e(Q(), 7, 6));
    sets.push_back(fin({e(Q(), 7, i), lifted}));
  }
  const SetFamily f(Q(), 7, sets);
  CHECK(is_lisf(f).is_lisf);
  LisfOptions tight;
  tight.max_selections = 3;
  CHECK_THROWS_AS(is_lisf(f, tight), BudgetExceeded);
}

TEST_CASE("witness verification rejects bad witnesses") {
  const SetFamily f(Q(), 2,
                    {fin({Vector::of(Q(), {1, 0})}), fin({Vector::of(Q(), {0, 1})})});
  DependenceWitness w{{Vector::of(Q(), {1, 0}), Vector::of(Q(), {0, 1})},
                      {sc(Q(), "1"), sc(Q(), "1")}};
  CHECK_FALSE(verify_witness(f, w));
  CHECK_FALSE(explain_witness_failure(f, w).empty());
  DependenceWitness trivial{{Vector::of(Q(), {1, 0}), Vector::of(Q(), {0, 1})},
                            {sc(Q(), "0"), sc(Q(), "0")}};
  CHECK_FALSE(verify_witness(f, trivial));
  DependenceWitness outside{{Vector::of(Q(), {2, 0}), Vector::of(Q(), {-2, 0})},
                            {sc(Q(), "1"), sc(Q(), "1")}};
  CHECK_FALSE(verify_witness(f, outside));
}

TEST_CASE("sampled oracle") {
  const SetFamily shared(
      Q(), 3,
      {fin({Vector::of(Q(), {1, 1, 0})}),
       fin({Vector::of(Q(), {1, 1, 0}), Vector::of(Q(), {0, 0, 1})})});
  const SampledVerdict s = is_lisf_sampled(shared, 10, 3);
  CHECK(s.exhaustive);
  CHECK(s.dependence_found);
  CHECK(verify_witness(shared, *s.witness));

  const SetFamily nested(Q(), 3,
                         {punc(Q(), 3, {e(Q(), 3, 0)}),
                          punc(Q(), 3, {e(Q(), 3, 0), e(Q(), 3, 1)})});
  const SampledVerdict t = is_lisf_sampled(nested, 500, 11);
  CHECK(t.dependence_found);
  CHECK(verify_witness(nested, *t.witness));
}

TEST_CASE("scale_family") {
  const SetFamily f(Q(), 2,
                    {fin({Vector::of(Q(), {1, 0}), Vector::of(Q(), {2, 0})}),
                     punc(Q(), 2, {Vector::of(Q(), {1, 1})})});
  const std::vector<Scalar> ones = {sc(Q(), "1"), sc(Q(), "1")};
  CHECK(scale_family(f, ones) == f);
  const std::vector<Scalar> lambdas = {sc(Q(), "-1"), sc(Q(), "5")};
  const SetFamily g = scale_family(f, lambdas);
  CHECK(g[0] == fin({Vector::of(Q(), {-1, 0}), Vector::of(Q(), {-2, 0})}));
  CHECK(g[1] == f[1]);
  const std::vector<Scalar> bad = {sc(Q(), "1"), sc(Q(), "0")};
  CHECK_THROWS_AS(scale_family(f, bad), ZeroScale);
  const std::vector<Scalar> short_list = {sc(Q(), "1")};
  CHECK_THROWS_AS(scale_family(f, short_list), ParamError);
}

TEST_CASE("apply_isomorphism") {
  const SetFamily f(Q(), 2, {fin({Vector::of(Q(), {1, 0})})});
  CHECK(apply_isomorphism(f, Matrix::identity(Q(), 2)) == f);
  const SetFamily swapped =
      apply_isomorphism(f, Matrix::of(Q(), {{0, 1}, {1, 0}}));
  CHECK(swapped[0] == fin({Vector::of(Q(), {0, 1})}));

  const SetFamily p(Q(), 2, {punc(Q(), 2, {Vector::of(Q(), {1, 0})})});
  CHECK(apply_isomorphism(p, Matrix::of(Q(), {{1, 1}, {0, 1}})) == p);
  CHECK_THROWS_AS(apply_isomorphism(f, Matrix::of(Q(), {{1, 1}, {1, 1}})),
                  NotInvertible);
  CHECK_THROWS_AS(apply_isomorphism(f, Matrix::identity(Q(), 3)),
                  DimensionMismatch);
}

TEST_CASE("symmetrize") {
  const SetFamily f(Q(), 2, {fin({Vector::of(Q(), {1, 0})})});
  const SetFamily s = symmetrize(f);
  CHECK(s[0] == fin({Vector::of(Q(), {1, 0}), Vector::of(Q(), {-1, 0})}));
  CHECK(symmetrize(s) == s);
}

}  // namespace
}  // namespace lisfmat
