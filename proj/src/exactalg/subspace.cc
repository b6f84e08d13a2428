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

#include "lisfmat/exactalg/subspace.h"

#include "lisfmat/errors.h"

namespace lisfmat {
namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch(a.field().to_string() + " vs " +
                        b.field().to_string());
  }
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspaces of F^" +
                            std::to_string(a.ambient_dim()) + " and F^" +
                            std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim) {
  return Subspace(field, ambient_dim, Matrix(field, 0, ambient_dim));
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim,
                        std::span<const Vector> vectors) {
  RrefResult r = rref(Matrix::from_rows(field, ambient_dim, vectors));
  Matrix basis(field, r.rank, ambient_dim);
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t c = 0; c < ambient_dim; ++c) {
      basis.at(i, c) = r.reduced.at(i, c);
    }
  }
  return Subspace(field, ambient_dim, std::move(basis));
}

bool Subspace::contains(const Vector& v) const {
  const Vector one[] = {v};
  require_shape(one, field_, ambient_dim_);
  // Reduce against the RREF rows: the pivot of row i is its first nonzero.
  Vector w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    Vector row = basis_.row(i);
    const Scalar c = w[row.leading_index()];
    if (!c.is_zero()) w.add_scaled(-c, row);
  }
  return w.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other);
  for (const Vector& v : other.basis_vectors()) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace subspace_sum(std::span<const Subspace> subspaces) {
  if (subspaces.empty()) throw ParamError("sum of an empty subspace list");
  std::vector<Vector> rows;
  for (const Subspace& s : subspaces) {
    require_compatible(subspaces.front(), s);
    for (Vector& v : s.basis_vectors()) rows.push_back(std::move(v));
  }
  return Subspace::span(subspaces.front().field(),
                        subspaces.front().ambient_dim(), rows);
}

bool is_direct_sum(std::span<const Subspace> subspaces) {
  std::size_t total = 0;
  for (const Subspace& s : subspaces) total += s.dim();
  return subspace_sum(subspaces).dim() == total;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const FieldSpec& field = a.field();
  const std::size_t l = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(field, l);
  std::vector<Vector> columns;
  for (const Vector& v : a.basis_vectors()) columns.push_back(v);
  for (const Vector& v : b.basis_vectors()) columns.push_back(-v);
  Matrix stacked = Matrix::from_columns(field, l, columns);
  std::vector<Vector> generators;
  for (const Vector& x : nullspace(stacked)) {
    Vector w(field, l);
    for (std::size_t i = 0; i < a.dim(); ++i) w.add_scaled(x[i], columns[i]);
    generators.push_back(std::move(w));
  }
  return Subspace::span(field, l, generators);
}

Vector random_nonzero_in(const Subspace& u, Rng& rng,
                         std::int64_t coeff_bound) {
  if (u.dim() == 0) throw ZeroSubspace();
  const std::vector<Vector> basis = u.basis_vectors();
  for (;;) {
    Vector v(u.field(), u.ambient_dim());
    for (const Vector& b : basis) {
      v.add_scaled(random_scalar(u.field(), rng, coeff_bound), b);
    }
    if (!v.is_zero()) return v;
  }
}

Vector random_nonzero_in(const Subspace& u, std::uint64_t seed,
                         std::int64_t coeff_bound) {
  Rng rng(seed);
  return random_nonzero_in(u, rng, coeff_bound);
}

}  // namespace lisfmat
