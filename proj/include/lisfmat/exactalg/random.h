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

#ifndef LISFMAT_EXACTALG_RANDOM_H_
#define LISFMAT_EXACTALG_RANDOM_H_

#include <cstdint>
#include <random>

#include "lisfmat/exactalg/linalg.h"
#include "lisfmat/exactalg/scalar.h"

namespace lisfmat {

// Mixes (seed, stream) into an independent child seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic random source. Draws are computed from raw mt19937_64 output
// by rejection, so sequences do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
  }
  // True with probability `p`, resolved to 1/2^32.
  bool bernoulli(double p);
  // A fresh generator seeded from this one.
  Rng split() { return Rng(derive_seed(engine_(), 0)); }

 private:
  std::mt19937_64 engine_;
};

// Uniform over [-bound, bound] for Q, over [0, p) for GF(p).
Scalar random_scalar(const FieldSpec& field, Rng& rng, std::int64_t bound);
// As random_scalar, excluding zero. For Q, optionally a fraction a/b with
// b in [1, bound].
Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng,
                             std::int64_t bound, bool fractions = false);
Vector random_vector(const FieldSpec& field, std::size_t dim, Rng& rng,
                     std::int64_t bound);
Vector random_nonzero_vector(const FieldSpec& field, std::size_t dim,
                             Rng& rng, std::int64_t bound);
// Retries until the sampled n x n matrix has full rank.
Matrix random_invertible_matrix(const FieldSpec& field, std::size_t n,
                                Rng& rng, std::int64_t bound);

}  // namespace lisfmat

#endif  // LISFMAT_EXACTALG_RANDOM_H_
