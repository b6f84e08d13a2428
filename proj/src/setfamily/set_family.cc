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

#include "lisfmat/setfamily/set_family.h"

#include <algorithm>
#include <utility>

#include "lisfmat/errors.h"

namespace lisfmat {

VectorSet VectorSet::finite(std::vector<Vector> vectors) {
  if (vectors.empty()) throw ParamError("finite vector set must be nonempty");
  const Vector& first = vectors.front();
  require_shape(vectors, first.field(), first.size());
  std::vector<Vector> unique;
  unique.reserve(vectors.size());
  for (Vector& v : vectors) {
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) {
      unique.push_back(std::move(v));
    }
  }
  return VectorSet(Finite{std::move(unique)});
}

VectorSet VectorSet::punctured(Subspace space) {
  if (space.dim() == 0) throw ZeroSubspace();
  return VectorSet(std::move(space));
}

const FieldSpec& VectorSet::field() const {
  return is_finite() ? vectors().front().field() : space().field();
}

std::size_t VectorSet::ambient_dim() const {
  return is_finite() ? vectors().front().size() : space().ambient_dim();
}

bool VectorSet::contains(const Vector& v) const {
  if (is_finite()) {
    const auto& vs = vectors();
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  }
  return v.field() == space().field() && v.size() == space().ambient_dim() &&
         !v.is_zero() && space().contains(v);
}

bool VectorSet::contains_zero() const {
  if (!is_finite()) return false;
  return std::any_of(vectors().begin(), vectors().end(),
                     [](const Vector& v) { return v.is_zero(); });
}

SetFamily::SetFamily(FieldSpec field, std::size_t ambient_dim,
                     std::vector<VectorSet> sets)
    : field_(field), ambient_dim_(ambient_dim), sets_(std::move(sets)) {
  if (ambient_dim_ == 0) throw ParamError("ambient dimension must be >= 1");
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!(sets_[i].field() == field_)) {
      throw FieldMismatch("set " + std::to_string(i + 1) + " is over " +
                          sets_[i].field().to_string() + ", family over " +
                          field_.to_string());
    }
    if (sets_[i].ambient_dim() != ambient_dim_) {
      throw DimensionMismatch("set " + std::to_string(i + 1) +
                              " lives in dimension " +
                              std::to_string(sets_[i].ambient_dim()));
    }
  }
}

SetFamily SetFamily::subfamily(std::uint32_t mask) const {
  std::vector<VectorSet> chosen;
  for (std::size_t i = 0; i < sets_.size() && i < 32; ++i) {
    if (mask & (std::uint32_t{1} << i)) chosen.push_back(sets_[i]);
  }
  return SetFamily(field_, ambient_dim_, std::move(chosen));
}

Directions directions(std::span<const Vector> vectors) {
  Directions out;
  for (const Vector& v : vectors) {
    if (v.is_zero()) {
      out.contains_zero = true;
      continue;
    }
    Vector d = v.normalized();
    if (std::find(out.dirs.begin(), out.dirs.end(), d) == out.dirs.end()) {
      out.dirs.push_back(std::move(d));
    }
  }
  return out;
}

Directions directions(const VectorSet& finite_set) {
  return directions(finite_set.vectors());
}

SetFamily scale_family(const SetFamily& family,
                       std::span<const Scalar> lambdas) {
  if (lambdas.size() != family.size()) {
    throw ParamError("expected " + std::to_string(family.size()) +
                     " scale factors, got " + std::to_string(lambdas.size()));
  }
  std::vector<VectorSet> sets;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (lambdas[i].is_zero()) throw ZeroScale(i + 1);
    const VectorSet& s = family[i];
    if (s.is_punctured()) {
      sets.push_back(s);
      continue;
    }
    std::vector<Vector> scaled;
    for (const Vector& v : s.vectors()) scaled.push_back(lambdas[i] * v);
    sets.push_back(VectorSet::finite(std::move(scaled)));
  }
  return SetFamily(family.field(), family.ambient_dim(), std::move(sets));
}

SetFamily apply_isomorphism(const SetFamily& family, const Matrix& t) {
  const std::size_t l = family.ambient_dim();
  if (!(t.field() == family.field())) {
    throw FieldMismatch("isomorphism over " + t.field().to_string());
  }
  if (t.rows() != l || t.cols() != l) {
    throw DimensionMismatch("isomorphism must be " + std::to_string(l) +
                            " x " + std::to_string(l));
  }
  if (rank(t) < l) throw NotInvertible();
  std::vector<VectorSet> sets;
  for (const VectorSet& s : family.sets()) {
    if (s.is_finite()) {
      std::vector<Vector> image;
      for (const Vector& v : s.vectors()) image.push_back(t * v);
      sets.push_back(VectorSet::finite(std::move(image)));
    } else {
      std::vector<Vector> image;
      for (const Vector& b : s.space().basis_vectors()) image.push_back(t * b);
      sets.push_back(
          VectorSet::punctured(Subspace::span(family.field(), l, image)));
    }
  }
  return SetFamily(family.field(), l, std::move(sets));
}

SetFamily symmetrize(const SetFamily& family) {
  std::vector<VectorSet> sets;
  for (const VectorSet& s : family.sets()) {
    if (s.is_punctured()) {
      sets.push_back(s);
      continue;
    }
    std::vector<Vector> both = s.vectors();
    for (const Vector& v : s.vectors()) both.push_back(-v);
    sets.push_back(VectorSet::finite(std::move(both)));
  }
  return SetFamily(family.field(), family.ambient_dim(), std::move(sets));
}

}  // namespace lisfmat
