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
#include "support/helpers.h"

namespace lisfmat {
namespace {

using namespace testing;

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("Q") == Q());
  CHECK(FieldSpec::parse("GF(7)") == GF(7));
  CHECK(GF(7).characteristic() == 7);
  CHECK(Q().characteristic() == 0);
  CHECK_THROWS_AS(FieldSpec::parse("GF(8)"), ParamError);
  CHECK_THROWS_AS(FieldSpec::parse("R"), ParseError);
  CHECK_THROWS_AS(FieldSpec::prime(2147483659ULL), ParamError);
  CHECK(FieldSpec::prime(2147483647ULL).modulus() == 2147483647U);
}

TEST_CASE("scalar arithmetic") {
  CHECK((sc(Q(), "1/2") + sc(Q(), "1/3")).to_string() == "5/6");
  CHECK(sc(GF(7), "3").inverse() == sc(GF(7), "5"));
  CHECK((sc(Q(), "2/3") * sc(Q(), "0")).is_zero());
  CHECK((sc(Q(), "2/3") * sc(Q(), "0/1")).to_string() == "0");
  CHECK(sc(GF(5), "-1") == sc(GF(5), "4"));
  CHECK(sc(Q(), "4/6").to_string() == "2/3");
  CHECK(sc(Q(), "-3/1").to_string() == "-3");
  CHECK(Scalar(GF(7), mpq_class(1, 2)) == sc(GF(7), "4"));
}

TEST_CASE("scalar errors") {
  CHECK_THROWS_AS(Scalar::zero(Q()).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::zero(GF(3)).inverse(), DivisionByZero);
  CHECK_THROWS_AS(sc(Q(), "1") + sc(GF(5), "1"), FieldMismatch);
  CHECK_THROWS_AS(sc(Q(), "1/0"), ParseError);
  CHECK_THROWS_AS(sc(Q(), "1/-2"), ParseError);
  CHECK_THROWS_AS(sc(Q(), "1.5"), ParseError);
  CHECK_THROWS_AS(sc(GF(5), "1/2"), ParseError);
  CHECK_THROWS_AS(Scalar(GF(3), mpq_class(1, 3)), DivisionByZero);
}

TEST_CASE("rref") {
  const RrefResult a = rref(Matrix::of(Q(), {{2, 4}, {1, 2}}));
  CHECK(a.rank == 1);
  CHECK(a.pivot_cols == std::vector<std::size_t>{0});
  CHECK(a.reduced == Matrix::of(Q(), {{1, 2}, {0, 0}}));

  const Matrix id = Matrix::identity(Q(), 3);
  CHECK(rref(id).reduced == id);
  CHECK(rref(id).rank == 3);

  CHECK(rank(Matrix::of(GF(5), {{1, 2}, {3, 4}})) == 2);
  CHECK(rank(Matrix::of(GF(2), {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(Matrix::of(Q(), {{0, 0, 0}})) == 0);
}

TEST_CASE("linear independence") {
  const std::vector<Vector> basis = {Vector::of(Q(), {1, 0}),
                                     Vector::of(Q(), {0, 1})};
  CHECK(is_linearly_independent(basis));
  const std::vector<Vector> multiple = {Vector::of(Q(), {1, 2}),
                                        Vector::of(Q(), {2, 4})};
  CHECK_FALSE(is_linearly_independent(multiple));
  CHECK(is_linearly_independent(std::vector<Vector>{}));
  const std::vector<Vector> mixed = {Vector::of(Q(), {1, 0}),
                                     Vector::of(GF(5), {0, 1})};
  CHECK_THROWS_AS(is_linearly_independent(mixed), FieldMismatch);
  const std::vector<Vector> ragged = {Vector::of(Q(), {1, 0}),
                                      Vector::of(Q(), {0, 1, 0})};
  CHECK_THROWS_AS(is_linearly_independent(ragged), DimensionMismatch);
}

TEST_CASE("nullspace") {
  const Matrix m = Matrix::of(Q(), {{1, 2, 3}, {2, 4, 6}});
  const std::vector<Vector> kernel = nullspace(m);
  CHECK(kernel.size() == 2);
  for (const Vector& v : kernel) CHECK((m * v).is_zero());
}

TEST_CASE("projective normalization") {
  CHECK(Vector::of(Q(), {0, -2, 4}).normalized() == Vector::of(Q(), {0, 1, -2}));
  CHECK(Vector::of(GF(3), {2, 1}).normalized() == Vector::of(GF(3), {1, 2}));
}

TEST_CASE("span") {
  const Subspace a = span_of(Q(), 3, {Vector::of(Q(), {2, 0, 0})});
  CHECK(a.dim() == 1);
  CHECK(a.basis() == Matrix::of(Q(), {{1, 0, 0}}));
  CHECK(span_of(Q(), 2, {}).dim() == 0);
  CHECK(span_of(Q(), 3,
                {Vector::of(Q(), {1, 1, 0}), Vector::of(Q(), {0, 0, 1}),
                 Vector::of(Q(), {1, 1, 1})})
            .dim() == 2);
}

TEST_CASE("subspace sum and direct sums") {
  const Subspace e1 = span_of(Q(), 3, {e(Q(), 3, 0)});
  const Subspace e2 = span_of(Q(), 3, {e(Q(), 3, 1)});
  const Subspace e12 = span_of(Q(), 3, {e(Q(), 3, 0), e(Q(), 3, 1)});
  const Subspace e23 = span_of(Q(), 3, {e(Q(), 3, 1), e(Q(), 3, 2)});
  CHECK(subspace_sum(std::vector<Subspace>{e1, e2}).dim() == 2);
  CHECK(subspace_sum(std::vector<Subspace>{e12, e12}) == e12);
  CHECK(subspace_sum(std::vector<Subspace>{e12, e23}).dim() == 3);

  const Subspace q1 = span_of(Q(), 2, {e(Q(), 2, 0)});
  const Subspace q2 = span_of(Q(), 2, {e(Q(), 2, 1)});
  CHECK(is_direct_sum(std::vector<Subspace>{q1, q2}));
  CHECK_FALSE(is_direct_sum(std::vector<Subspace>{e12, e23}));

  const FieldSpec f = GF(2);
  CHECK_FALSE(is_direct_sum(std::vector<Subspace>{
      span_of(f, 3, {Vector::of(f, {1, 1, 0})}),
      span_of(f, 3, {Vector::of(f, {0, 1, 1})}),
      span_of(f, 3, {Vector::of(f, {1, 0, 1})})}));
  CHECK_THROWS_AS(subspace_sum(std::vector<Subspace>{}), ParamError);
}

TEST_CASE("intersection") {
  const Subspace e12 = span_of(Q(), 3, {e(Q(), 3, 0), e(Q(), 3, 1)});
  const Subspace e23 = span_of(Q(), 3, {e(Q(), 3, 1), e(Q(), 3, 2)});
  CHECK(intersect(e12, e23) == span_of(Q(), 3, {e(Q(), 3, 1)}));
  CHECK(intersect(e12, span_of(Q(), 3, {e(Q(), 3, 2)})).dim() == 0);
}

TEST_CASE("containment") {
  const Subspace e1 = span_of(Q(), 2, {e(Q(), 2, 0)});
  CHECK(e1.contains(Vector::of(Q(), {5, 0})));
  CHECK_FALSE(e1.contains(Vector::of(Q(), {0, 1})));
  const Subspace plane = span_of(
      Q(), 3, {Vector::of(Q(), {1, 1, 0}), Vector::of(Q(), {0, 0, 1})});
  CHECK(plane.contains(Vector::of(Q(), {2, 2, 7})));
  CHECK(plane.contains(span_of(Q(), 3, {Vector::of(Q(), {1, 1, 1})})));
}

TEST_CASE("random nonzero element of a subspace") {
  const Subspace line = span_of(Q(), 2, {e(Q(), 2, 0)});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Vector v = random_nonzero_in(line, seed, 3);
    CHECK_FALSE(v[0].is_zero());
    CHECK(v[1].is_zero());
  }
  CHECK_THROWS_AS(random_nonzero_in(Subspace::zero(Q(), 2), 1, 3),
                  ZeroSubspace);

  const FieldSpec f = GF(3);
  const Subspace u = span_of(f, 3, {Vector::of(f, {1, 0, 1})});
  const Vector v = random_nonzero_in(u, 7, 1);
  CHECK((v == Vector::of(f, {1, 0, 1}) || v == Vector::of(f, {2, 0, 2})));
}

TEST_CASE("seeded generators are reproducible") {
  Rng a(derive_seed(42, 3));
  Rng b(derive_seed(42, 3));
  for (int i = 0; i < 50; ++i) CHECK(a.uniform(-100, 100) == b.uniform(-100, 100));
  CHECK(derive_seed(42, 3) != derive_seed(42, 4));
  Rng rng(5);
  const Matrix t = random_invertible_matrix(GF(2), 4, rng, 1);
  CHECK(rank(t) == 4);
}

}  // namespace
}  // namespace lisfmat
