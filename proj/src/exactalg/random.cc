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

#include "lisfmat/exactalg/random.h"

#include <limits>

#include "lisfmat/errors.h"

namespace lisfmat {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ParamError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::bernoulli(double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  const auto threshold = static_cast<std::uint64_t>(p * 4294967296.0);
  return (engine_() >> 32) < threshold;
}

Scalar random_scalar(const FieldSpec& field, Rng& rng, std::int64_t bound) {
  if (field.is_rational()) return Scalar(field, rng.uniform(-bound, bound));
  return Scalar(field, rng.uniform(0, field.modulus() - 1));
}

Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng,
                             std::int64_t bound, bool fractions) {
  if (field.is_rational()) {
    std::int64_t num = rng.uniform(1, bound);
    if (rng.uniform(0, 1) == 1) num = -num;
    std::int64_t den = fractions ? rng.uniform(1, bound) : 1;
    return Scalar(field, mpq_class(mpz_class(static_cast<long>(num)),
                                   mpz_class(static_cast<long>(den))));
  }
  return Scalar(field, rng.uniform(1, field.modulus() - 1));
}

Vector random_vector(const FieldSpec& field, std::size_t dim, Rng& rng,
                     std::int64_t bound) {
  std::vector<Scalar> coords;
  coords.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    coords.push_back(random_scalar(field, rng, bound));
  }
  return Vector(field, std::move(coords));
}

Vector random_nonzero_vector(const FieldSpec& field, std::size_t dim,
                             Rng& rng, std::int64_t bound) {
  if (dim == 0) throw ParamError("no nonzero vectors in dimension 0");
  for (;;) {
    Vector v = random_vector(field, dim, rng, bound);
    if (!v.is_zero()) return v;
  }
}

Matrix random_invertible_matrix(const FieldSpec& field, std::size_t n,
                                Rng& rng, std::int64_t bound) {
  for (;;) {
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m.at(r, c) = random_scalar(field, rng, bound);
      }
    }
    if (rank(m) == n) return m;
  }
}

}  // namespace lisfmat
