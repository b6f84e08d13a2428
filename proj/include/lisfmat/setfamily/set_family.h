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

#ifndef LISFMAT_SETFAMILY_SET_FAMILY_H_
#define LISFMAT_SETFAMILY_SET_FAMILY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "lisfmat/exactalg/linalg.h"
#include "lisfmat/exactalg/subspace.h"

namespace lisfmat {

// One member of a set family: either an explicit finite sample of vectors or
// a subspace with the origin removed.
class VectorSet {
 public:
  // Duplicates are dropped, keeping first occurrences in order. Throws
  // ParamError on an empty list.
  static VectorSet finite(std::vector<Vector> vectors);
  // Throws ZeroSubspace when `space` is {0}, since the punctured set would
  // be empty.
  static VectorSet punctured(Subspace space);

  bool is_finite() const { return std::holds_alternative<Finite>(body_); }
  bool is_punctured() const { return !is_finite(); }

  // Precondition: is_finite().
  const std::vector<Vector>& vectors() const {
    return std::get<Finite>(body_).vectors;
  }
  // Precondition: is_punctured().
  const Subspace& space() const { return std::get<Subspace>(body_); }

  const FieldSpec& field() const;
  std::size_t ambient_dim() const;

  // List membership for finite sets; nonzero and in the space otherwise.
  bool contains(const Vector& v) const;
  bool contains_zero() const;

  friend bool operator==(const VectorSet&, const VectorSet&) = default;

 private:
  struct Finite {
    std::vector<Vector> vectors;
    friend bool operator==(const Finite&, const Finite&) = default;
  };

  explicit VectorSet(std::variant<Finite, Subspace> body)
      : body_(std::move(body)) {}

  std::variant<Finite, Subspace> body_;
};

// Ordered family E_1..E_n over a common field^l. Labels are positional:
// sets()[i] carries label i + 1.
class SetFamily {
 public:
  // Throws FieldMismatch/DimensionMismatch if a member disagrees with the
  // family's field or ambient dimension, ParamError if ambient_dim is 0.
  SetFamily(FieldSpec field, std::size_t ambient_dim,
            std::vector<VectorSet> sets);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return sets_.size(); }
  const VectorSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<VectorSet>& sets() const { return sets_; }

  // Members whose positions are set in `mask` (bit i <-> label i + 1),
  // in label order.
  SetFamily subfamily(std::uint32_t mask) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  FieldSpec field_;
  std::size_t ambient_dim_;
  std::vector<VectorSet> sets_;
};

struct Directions {
  std::vector<Vector> dirs;
  bool contains_zero = false;
};

// Projectively distinct normalized representatives of the nonzero vectors,
// in order of first appearance.
Directions directions(std::span<const Vector> vectors);
Directions directions(const VectorSet& finite_set);

// Transforms under which the LISF property is invariant.

// Set i is multiplied by lambdas[i]. Punctured subspaces are unchanged.
// Throws ZeroScale for a zero factor, ParamError on a length mismatch.
SetFamily scale_family(const SetFamily& family,
                       std::span<const Scalar> lambdas);
// Every vector v becomes t * v; punctured spaces map to the span of the
// transformed basis. Throws NotInvertible unless t is square of full rank.
SetFamily apply_isomorphism(const SetFamily& family, const Matrix& t);
// Finite E becomes E followed by the new members of -E. Punctured spaces are
// already symmetric.
SetFamily symmetrize(const SetFamily& family);

}  // namespace lisfmat

#endif  // LISFMAT_SETFAMILY_SET_FAMILY_H_
