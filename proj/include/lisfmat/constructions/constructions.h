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

// Matroids built from set families.
//
// For a family E_1..E_n the independence system has as members the label
// sets I whose subfamily {E_i : i in I} is a LISF. Two hypothesis classes
// make this system a matroid:
//
//  * line families: every E_i lies in a one-dimensional subspace. Each set
//    then collapses to a single direction (or to a loop when it contains the
//    origin), and the system equals the vector matroid of the direction
//    matrix.
//  * direct-sum families: over a field of characteristic zero, the space is
//    W_1 + ... + W_k (direct, each of dimension n) and every E_i is a
//    punctured subspace U_i of some W_j with ceil(n/2) + 1 <= dim U_i <= n.
//    Two sets inside the same W_j have dimensions summing past n, so they
//    meet outside the origin and never co-occur in a member; sets in
//    distinct summands are always jointly independent. Several sets may
//    share a summand.
//
// Without these hypotheses I.1 and I.2 still hold (a subfamily of a LISF is
// a LISF) but I.3 can fail; the two counterexample families below show it.

#ifndef LISFMAT_CONSTRUCTIONS_CONSTRUCTIONS_H_
#define LISFMAT_CONSTRUCTIONS_CONSTRUCTIONS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lisfmat/exactalg/random.h"
#include "lisfmat/exactalg/subspace.h"
#include "lisfmat/matroid/independence_family.h"
#include "lisfmat/setfamily/lisf.h"
#include "lisfmat/setfamily/set_family.h"

namespace lisfmat {

// Members are the label sets whose subfamily is a LISF. Supersets of a
// non-member are never decided. Throws ParamError for an empty family,
// GroundTooLarge beyond kMaxGroundSize sets, and BudgetExceeded carrying the
// offending subset.
IndependenceFamily lisf_matroid(const SetFamily& family,
                                const LisfOptions& options = {});

enum class HypothesisFailure {
  kNotInOneDimSubspace,
  kNotPuncturedSubspace,
  kDimBoundViolated,
  kNotInsideSummand,
  kCharacteristicNotZero,
  kDecompositionNotDirect,
};

std::string to_string(HypothesisFailure failure);

struct HypothesisReport {
  // (label, reason); label 0 marks failures of the field or decomposition.
  std::vector<std::pair<std::size_t, HypothesisFailure>> failures;

  bool satisfied() const { return failures.empty(); }
};

// Each finite set must have all nonzero members on one line through the
// origin (the origin itself is allowed); each punctured set must be a line.
HypothesisReport line_family_hypotheses(const SetFamily& family);

// l x n matrix whose column i is the normalized direction of E_i, or zero
// when E_i contains the origin (label i is then a loop). Throws
// HypothesesNotMet unless line_family_hypotheses holds.
Matrix direction_matrix(const SetFamily& family);

struct DirectSumDecomposition {
  FieldSpec field;
  std::size_t ambient_dim = 0;
  std::size_t summand_dim = 0;  // n
  std::vector<Subspace> summands;

  // Summands share the field and ambient dimension, all have dimension
  // summand_dim >= 1, and their sum is direct.
  bool valid() const;

  friend bool operator==(const DirectSumDecomposition&,
                         const DirectSumDecomposition&) = default;
};

// Characteristic zero, a valid decomposition, and every set a punctured
// subspace inside some summand with ceil(n/2) + 1 <= dim <= n.
HypothesisReport direct_sum_family_hypotheses(
    const SetFamily& family, const DirectSumDecomposition& decomposition);

// Index of the first summand containing `space`, or summands.size().
std::size_t containing_summand(const DirectSumDecomposition& decomposition,
                               const Subspace& space);

// The disk counterexample in Q^2: finite rational samples of
//   E_1 = disk((1,1), 1), E_2 = disk((1,0), 1) - {0}, E_3 = disk((1,-1), 1/3).
// The samples keep the dependences that decide the independence system:
// (1/2,1/2) lies in E_1 and E_2, and (1,-1) in E_3 is parallel to
// (1/2,-1/2) in E_2.
SetFamily disk_counterexample_family();

struct Disk {
  Scalar center_x;
  Scalar center_y;
  Scalar radius_squared;
  // Exact test of (x - cx)^2 + (y - cy)^2 <= r^2.
  bool contains(const Vector& point) const;
};
// The closed disks E_1..E_3 of disk_counterexample_family(); the origin is
// additionally excluded from E_2.
std::vector<Disk> counterexample_disks();

// The punctured-plane counterexample in Q^3, sampled from
//   E_1 = xy-plane minus the y-axis,
//   E_2 = span{(0,0,1), (1,1,0)} minus the origin,
//   E_3 = yz-plane minus the y-axis.
// (1,1,0) is shared by E_1 and E_2, (0,0,1) by E_2 and E_3.
SetFamily plane_counterexample_family();

struct LineFamilyParams {
  std::uint64_t seed = 0;
  std::size_t n = 1;  // number of sets
  std::size_t l = 1;  // ambient dimension
  FieldSpec field;
  std::size_t samples_per_set = 1;
  double loop_probability = 0.0;
};

// Set i holds samples_per_set random nonzero multiples of a random direction
// d_i, plus the zero vector with probability loop_probability. Always
// satisfies line_family_hypotheses.
SetFamily random_line_family(const LineFamilyParams& params);

struct DirectSumFamilyParams {
  std::uint64_t seed = 0;
  std::size_t k = 1;  // summands
  std::size_t n = 2;  // summand dimension
  std::size_t m = 1;  // sets
  std::size_t l = 2;  // ambient dimension
};

// Summands are the images of k coordinate blocks of size n under a random
// invertible l x l matrix over Q. Each set is a punctured random subspace of
// a random summand with dimension uniform in [ceil(n/2) + 1, n]. Throws
// ParamError when k * n > l or n < 2.
std::pair<SetFamily, DirectSumDecomposition> random_direct_sum_family(
    const DirectSumFamilyParams& params);

struct MixedFamilyParams {
  std::uint64_t seed = 0;
  std::size_t n = 1;
  std::size_t l = 1;
  FieldSpec field;
  std::size_t max_set_size = 3;
  double punctured_probability = 0.0;
  double zero_probability = 0.0;
  std::int64_t coeff_bound = 2;
};

// Unconstrained random families: finite sets of small-entry vectors
// (possibly off any single line) and punctured spans of random vectors.
SetFamily random_mixed_family(const MixedFamilyParams& params);

}  // namespace lisfmat

#endif  // LISFMAT_CONSTRUCTIONS_CONSTRUCTIONS_H_
