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

// Deciding whether a set family is linearly independent (LISF): every
// selection of one vector per set is linearly independent.
//
// Decision procedure. A selection v_1..v_n is dependent iff some nonempty
// subfamily has nonzero members summing to zero after scaling. Scalars are
// absorbed into the members: a nonzero multiple of a member of a punctured
// subspace is again a member, and a member of a finite set is a nonzero
// multiple of its direction. So the family fails iff
//   (a) some finite set contains the zero vector, or
//   (b) for some choice of one direction per finite set, the lines through
//       the chosen directions together with the punctured subspaces do not
//       form a direct sum.
// (b) is enumerated depth-first over direction choices in label order with
// an incremental echelon basis; a dependent prefix prunes its whole subtree.
// The first failure met is therefore the lexicographically least failing
// choice vector, with unchosen sets padded by their first direction.

#ifndef LISFMAT_SETFAMILY_LISF_H_
#define LISFMAT_SETFAMILY_LISF_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lisfmat/setfamily/set_family.h"

namespace lisfmat {

// A selection (one vector per set, in label order) and coefficients, not all
// zero, whose combination is the zero vector.
struct DependenceWitness {
  std::vector<Vector> selection;
  std::vector<Scalar> coefficients;

  friend bool operator==(const DependenceWitness&,
                         const DependenceWitness&) = default;
};

struct LisfVerdict {
  bool is_lisf = true;
  std::optional<DependenceWitness> witness;  // present iff !is_lisf
};

struct LisfOptions {
  // Upper bound on enumerated direction choices (search-tree nodes).
  std::uint64_t max_selections = 1'000'000;
};

LisfVerdict is_lisf(const SetFamily& family, const LisfOptions& options = {});

// Checks every clause of a witness against `family`: one member per set,
// coefficients not all zero, combination equal to zero.
bool verify_witness(const SetFamily& family, const DependenceWitness& witness);
// Empty when valid, otherwise the first failed clause.
std::string explain_witness_failure(const SetFamily& family,
                                    const DependenceWitness& witness);

// Builds the canonical witness for a dependent selection: a kernel vector of
// the selection, scaled so its first nonzero coefficient is 1. Returns
// nullopt if the selection is independent.
std::optional<DependenceWitness> dependence_among(
    std::span<const Vector> selection, const FieldSpec& field,
    std::size_t ambient_dim);

struct SampledVerdict {
  bool dependence_found = false;
  std::optional<DependenceWitness> witness;
  std::uint64_t selections_tested = 0;
  // True when every selection of an all-finite family was tested, in which
  // case !dependence_found certifies the family is a LISF.
  bool exhaustive = false;
};

struct SamplingOptions {
  // Coefficient range for vectors drawn from punctured subspaces.
  std::int64_t coeff_bound = 1;
};

// Monte Carlo cross-check for is_lisf that tests concrete selections by rank.
// Finite sets are enumerated exhaustively when the product of their sizes is
// at most `trials`; punctured sets contribute random_nonzero_in draws.
SampledVerdict is_lisf_sampled(const SetFamily& family, std::uint64_t trials,
                               std::uint64_t seed,
                               const SamplingOptions& options = {});

}  // namespace lisfmat

#endif  // LISFMAT_SETFAMILY_LISF_H_
