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

// Shorthands and hand-rolled generators shared by the tests.

#ifndef LISFMAT_TESTS_SUPPORT_HELPERS_H_
#define LISFMAT_TESTS_SUPPORT_HELPERS_H_

#include <initializer_list>
#include <string>
#include <vector>

#include "lisfmat/exactalg/linalg.h"
#include "lisfmat/exactalg/random.h"
#include "lisfmat/exactalg/subspace.h"
#include "lisfmat/setfamily/set_family.h"

namespace lisfmat::testing {

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec GF(std::uint64_t p) { return FieldSpec::prime(p); }

inline Scalar sc(const FieldSpec& f, const std::string& text) {
  return Scalar::parse(f, text);
}

// Vector from scalar literals, e.g. vec(Q(), {"1/2", "-1"}).
inline Vector vec(const FieldSpec& f, std::initializer_list<std::string> xs) {
  std::vector<Scalar> coords;
  for (const std::string& x : xs) coords.push_back(Scalar::parse(f, x));
  return Vector(f, std::move(coords));
}

inline Vector e(const FieldSpec& f, std::size_t dim, std::size_t i) {
  std::vector<Scalar> coords(dim, Scalar::zero(f));
  coords[i] = Scalar::one(f);
  return Vector(f, std::move(coords));
}

inline Subspace span_of(const FieldSpec& f, std::size_t dim,
                        std::vector<Vector> vs) {
  return Subspace::span(f, dim, vs);
}

inline VectorSet fin(std::vector<Vector> vs) {
  return VectorSet::finite(std::move(vs));
}

inline VectorSet punc(const FieldSpec& f, std::size_t dim,
                      std::vector<Vector> vs) {
  return VectorSet::punctured(Subspace::span(f, dim, vs));
}

inline std::vector<FieldSpec> test_fields() {
  return {Q(), GF(2), GF(3), GF(5), GF(7)};
}

inline Matrix random_matrix(const FieldSpec& f, std::size_t rows,
                            std::size_t cols, Rng& rng, std::int64_t bound) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = random_scalar(f, rng, bound);
    }
  }
  return m;
}

// Low-rank-biased list of vectors: each vector is, with probability 1/2, a
// combination of earlier ones.
inline std::vector<Vector> random_vectors(const FieldSpec& f, std::size_t dim,
                                          std::size_t count, Rng& rng) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!out.empty() && rng.bernoulli(0.5)) {
      Vector v(f, dim);
      for (const Vector& w : out) v.add_scaled(random_scalar(f, rng, 2), w);
      out.push_back(v);
    } else {
      out.push_back(random_vector(f, dim, rng, 3));
    }
  }
  return out;
}

}  // namespace lisfmat::testing

#endif  // LISFMAT_TESTS_SUPPORT_HELPERS_H_
