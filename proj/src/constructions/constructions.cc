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

#include "lisfmat/constructions/constructions.h"

#include <algorithm>

#include "lisfmat/errors.h"

namespace lisfmat {
namespace {

Scalar q(long num, long den = 1) {
  return Scalar(FieldSpec::rationals(), mpq_class(mpz_class(num), mpz_class(den)));
}

Vector q2(Scalar x, Scalar y) {
  return Vector(FieldSpec::rationals(), {std::move(x), std::move(y)});
}

std::size_t lower_dim_bound(std::size_t n) { return (n + 1) / 2 + 1; }

}  // namespace

IndependenceFamily lisf_matroid(const SetFamily& family,
                                const LisfOptions& options) {
  const std::size_t n = family.size();
  if (n == 0) throw ParamError("family has no sets");
  if (n > kMaxGroundSize) throw GroundTooLarge(n);
  const LabelSet universe = full_set(n);
  std::vector<bool> member(std::size_t{universe} + 1, false);
  member[0] = true;
  std::vector<LabelSet> members = {0};
  for (LabelSet s = 1; s <= universe; ++s) {
    bool candidate = true;
    for (LabelSet rest = s; rest != 0 && candidate; rest &= rest - 1) {
      candidate = member[s & ~(rest & -rest)];
    }
    if (!candidate) continue;
    try {
      if (is_lisf(family.subfamily(s), options).is_lisf) {
        member[s] = true;
        members.push_back(s);
      }
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded(s, options.max_selections);
    }
  }
  return IndependenceFamily(n, std::move(members));
}

std::string to_string(HypothesisFailure failure) {
  switch (failure) {
    case HypothesisFailure::kNotInOneDimSubspace:
      return "NotInOneDimSubspace";
    case HypothesisFailure::kNotPuncturedSubspace:
      return "NotPuncturedSubspace";
    case HypothesisFailure::kDimBoundViolated:
      return "DimBoundViolated";
    case HypothesisFailure::kNotInsideSummand:
      return "NotInsideSummand";
    case HypothesisFailure::kCharacteristicNotZero:
      return "CharacteristicNotZero";
    case HypothesisFailure::kDecompositionNotDirect:
      return "DecompositionNotDirect";
  }
  return "Unknown";
}

HypothesisReport line_family_hypotheses(const SetFamily& family) {
  HypothesisReport report;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const VectorSet& s = family[i];
    const bool on_line =
        s.is_finite() ? directions(s).dirs.size() <= 1 : s.space().dim() == 1;
    if (!on_line) {
      report.failures.emplace_back(i + 1,
                                   HypothesisFailure::kNotInOneDimSubspace);
    }
  }
  return report;
}

Matrix direction_matrix(const SetFamily& family) {
  const HypothesisReport report = line_family_hypotheses(family);
  if (!report.satisfied()) {
    throw HypothesesNotMet("set " + std::to_string(report.failures[0].first) +
                           " does not lie on a line through the origin");
  }
  std::vector<Vector> columns;
  for (const VectorSet& s : family.sets()) {
    if (s.is_punctured()) {
      columns.push_back(s.space().basis().row(0));
      continue;
    }
    Directions d = directions(s);
    if (d.contains_zero) {
      columns.emplace_back(family.field(), family.ambient_dim());
    } else {
      columns.push_back(d.dirs.front());
    }
  }
  return Matrix::from_columns(family.field(), family.ambient_dim(), columns);
}

bool DirectSumDecomposition::valid() const {
  if (summands.empty() || summand_dim == 0) return false;
  for (const Subspace& w : summands) {
    if (!(w.field() == field) || w.ambient_dim() != ambient_dim ||
        w.dim() != summand_dim) {
      return false;
    }
  }
  return is_direct_sum(summands);
}

std::size_t containing_summand(const DirectSumDecomposition& decomposition,
                               const Subspace& space) {
  for (std::size_t j = 0; j < decomposition.summands.size(); ++j) {
    const Subspace& w = decomposition.summands[j];
    if (w.field() == space.field() &&
        w.ambient_dim() == space.ambient_dim() && w.contains(space)) {
      return j;
    }
  }
  return decomposition.summands.size();
}

HypothesisReport direct_sum_family_hypotheses(
    const SetFamily& family, const DirectSumDecomposition& decomposition) {
  if (!(family.field() == decomposition.field)) {
    throw FieldMismatch("family over " + family.field().to_string() +
                        ", decomposition over " +
                        decomposition.field.to_string());
  }
  if (family.ambient_dim() != decomposition.ambient_dim) {
    throw DimensionMismatch("family and decomposition ambient dimensions");
  }
  HypothesisReport report;
  if (family.field().characteristic() != 0) {
    report.failures.emplace_back(0, HypothesisFailure::kCharacteristicNotZero);
  }
  if (!decomposition.valid()) {
    report.failures.emplace_back(0, HypothesisFailure::kDecompositionNotDirect);
  }
  const std::size_t n = decomposition.summand_dim;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const VectorSet& s = family[i];
    if (!s.is_punctured()) {
      report.failures.emplace_back(i + 1,
                                   HypothesisFailure::kNotPuncturedSubspace);
      continue;
    }
    const std::size_t dim = s.space().dim();
    if (dim < lower_dim_bound(n) || dim > n) {
      report.failures.emplace_back(i + 1, HypothesisFailure::kDimBoundViolated);
    }
    if (containing_summand(decomposition, s.space()) ==
        decomposition.summands.size()) {
      report.failures.emplace_back(i + 1, HypothesisFailure::kNotInsideSummand);
    }
  }
  return report;
}

bool Disk::contains(const Vector& point) const {
  const Scalar dx = point[0] - center_x;
  const Scalar dy = point[1] - center_y;
  return (dx * dx + dy * dy).rational() <= radius_squared.rational();
}

std::vector<Disk> counterexample_disks() {
  return {
      {q(1), q(1), q(1)},
      {q(1), q(0), q(1)},
      {q(1), q(-1), q(1, 9)},
  };
}

SetFamily disk_counterexample_family() {
  const FieldSpec field = FieldSpec::rationals();
  std::vector<VectorSet> sets;
  sets.push_back(VectorSet::finite({q2(q(1), q(1)), q2(q(1), q(2)),
                                    q2(q(1, 2), q(1, 2))}));
  sets.push_back(VectorSet::finite({q2(q(1, 2), q(1, 2)),
                                    q2(q(1, 2), q(-1, 2)), q2(q(1), q(0))}));
  sets.push_back(VectorSet::finite({q2(q(1), q(-1)), q2(q(1), q(-7, 8))}));
  return SetFamily(field, 2, std::move(sets));
}

SetFamily plane_counterexample_family() {
  const FieldSpec f = FieldSpec::rationals();
  std::vector<VectorSet> sets;
  sets.push_back(VectorSet::finite({Vector::of(f, {1, 0, 0}),
                                    Vector::of(f, {1, 1, 0}),
                                    Vector::of(f, {1, -1, 0}),
                                    Vector::of(f, {2, 1, 0})}));
  sets.push_back(VectorSet::finite({Vector::of(f, {1, 1, 0}),
                                    Vector::of(f, {0, 0, 1}),
                                    Vector::of(f, {1, 1, 1}),
                                    Vector::of(f, {1, 1, -1})}));
  sets.push_back(VectorSet::finite({Vector::of(f, {0, 0, 1}),
                                    Vector::of(f, {0, 1, 1}),
                                    Vector::of(f, {0, -1, 1}),
                                    Vector::of(f, {0, 1, 2})}));
  return SetFamily(f, 3, std::move(sets));
}

SetFamily random_line_family(const LineFamilyParams& params) {
  if (params.n == 0 || params.l == 0 || params.samples_per_set == 0) {
    throw ParamError("n, l and samples_per_set must be positive");
  }
  Rng rng(params.seed);
  std::vector<VectorSet> sets;
  for (std::size_t i = 0; i < params.n; ++i) {
    const Vector direction =
        random_nonzero_vector(params.field, params.l, rng, 2);
    std::vector<Vector> samples;
    for (std::size_t j = 0; j < params.samples_per_set; ++j) {
      samples.push_back(
          random_nonzero_scalar(params.field, rng, 4, /*fractions=*/true) *
          direction);
    }
    if (rng.bernoulli(params.loop_probability)) {
      samples.emplace_back(params.field, params.l);
    }
    sets.push_back(VectorSet::finite(std::move(samples)));
  }
  return SetFamily(params.field, params.l, std::move(sets));
}

std::pair<SetFamily, DirectSumDecomposition> random_direct_sum_family(
    const DirectSumFamilyParams& p) {
  if (p.n < 2) {
    throw ParamError("summand dimension n = " + std::to_string(p.n) +
                     " leaves the range ceil(n/2)+1 .. n empty; need n >= 2");
  }
  if (p.k == 0 || p.m == 0) throw ParamError("k and m must be positive");
  if (p.k * p.n > p.l) {
    throw ParamError("k * n = " + std::to_string(p.k * p.n) +
                     " exceeds ambient dimension " + std::to_string(p.l));
  }
  const FieldSpec field = FieldSpec::rationals();
  Rng rng(p.seed);
  const Matrix t = random_invertible_matrix(field, p.l, rng, 2);

  DirectSumDecomposition decomposition{field, p.l, p.n, {}};
  std::vector<std::vector<Vector>> summand_bases;
  for (std::size_t j = 0; j < p.k; ++j) {
    std::vector<Vector> basis;
    for (std::size_t c = 0; c < p.n; ++c) basis.push_back(t.column(j * p.n + c));
    decomposition.summands.push_back(Subspace::span(field, p.l, basis));
    summand_bases.push_back(std::move(basis));
  }

  std::vector<VectorSet> sets;
  for (std::size_t i = 0; i < p.m; ++i) {
    const auto& basis = summand_bases[rng.index(p.k)];
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(
        static_cast<std::int64_t>(lower_dim_bound(p.n)),
        static_cast<std::int64_t>(p.n)));
    std::vector<Vector> generators;
    do {
      generators.clear();
      for (std::size_t d = 0; d < dim; ++d) {
        Vector v(field, p.l);
        for (const Vector& b : basis) {
          v.add_scaled(random_scalar(field, rng, 2), b);
        }
        generators.push_back(std::move(v));
      }
    } while (!is_linearly_independent(generators));
    sets.push_back(
        VectorSet::punctured(Subspace::span(field, p.l, generators)));
  }
  return {SetFamily(field, p.l, std::move(sets)), std::move(decomposition)};
}

SetFamily random_mixed_family(const MixedFamilyParams& p) {
  if (p.n == 0 || p.l == 0 || p.max_set_size == 0) {
    throw ParamError("n, l and max_set_size must be positive");
  }
  Rng rng(p.seed);
  std::vector<VectorSet> sets;
  for (std::size_t i = 0; i < p.n; ++i) {
    if (rng.bernoulli(p.punctured_probability)) {
      const std::size_t count = 1 + rng.index(p.l);
      std::vector<Vector> generators;
      for (std::size_t j = 0; j < count; ++j) {
        generators.push_back(
            random_nonzero_vector(p.field, p.l, rng, p.coeff_bound));
      }
      sets.push_back(
          VectorSet::punctured(Subspace::span(p.field, p.l, generators)));
      continue;
    }
    const std::size_t size = 1 + rng.index(p.max_set_size);
    const bool on_line = rng.bernoulli(0.5);
    const Vector direction =
        random_nonzero_vector(p.field, p.l, rng, p.coeff_bound);
    std::vector<Vector> members;
    for (std::size_t j = 0; j < size; ++j) {
      if (on_line) {
        members.push_back(random_nonzero_scalar(p.field, rng, 3) * direction);
      } else {
        members.push_back(
            random_nonzero_vector(p.field, p.l, rng, p.coeff_bound));
      }
    }
    if (rng.bernoulli(p.zero_probability)) {
      members.insert(members.begin() + static_cast<std::ptrdiff_t>(
                                           rng.index(members.size() + 1)),
                     Vector(p.field, p.l));
    }
    sets.push_back(VectorSet::finite(std::move(members)));
  }
  return SetFamily(p.field, p.l, std::move(sets));
}

}  // namespace lisfmat
