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

#ifndef LISFMAT_EXACTALG_SUBSPACE_H_
#define LISFMAT_EXACTALG_SUBSPACE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lisfmat/exactalg/linalg.h"
#include "lisfmat/exactalg/random.h"

namespace lisfmat {

// A linear subspace of field^l, stored as the nonzero rows of its reduced
// row echelon form. The representation is canonical: two Subspace values
// describe the same subspace iff they compare equal.
class Subspace {
 public:
  static Subspace zero(FieldSpec field, std::size_t ambient_dim);
  static Subspace span(FieldSpec field, std::size_t ambient_dim,
                       std::span<const Vector> vectors);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  // dim() x ambient_dim() matrix in RREF without zero rows.
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(FieldSpec field, std::size_t ambient_dim, Matrix basis)
      : field_(field), ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  FieldSpec field_;
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
};

// Span of all the bases. Requires a nonempty list.
Subspace subspace_sum(std::span<const Subspace> subspaces);

// True iff dim of the sum equals the sum of the dims.
bool is_direct_sum(std::span<const Subspace> subspaces);

// Intersection via the kernel of [A; -B]^T: each kernel vector (x, y) gives
// x * A = y * B in the intersection.
Subspace intersect(const Subspace& a, const Subspace& b);

// Nonzero combination of the basis rows with coefficients drawn from
// [-coeff_bound, coeff_bound] (Q) or [0, p) (GF(p)). Throws ZeroSubspace for
// the zero subspace.
Vector random_nonzero_in(const Subspace& u, Rng& rng,
                         std::int64_t coeff_bound);
Vector random_nonzero_in(const Subspace& u, std::uint64_t seed,
                         std::int64_t coeff_bound);

}  // namespace lisfmat

#endif  // LISFMAT_EXACTALG_SUBSPACE_H_
