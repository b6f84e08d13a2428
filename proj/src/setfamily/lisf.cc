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

#include "lisfmat/setfamily/lisf.h"

#include <algorithm>
#include <limits>

#include "lisfmat/errors.h"

namespace lisfmat {
namespace {

// A projective class of a finite set together with the first member lying
// on it; the member is what ends up in witnesses.
struct DirectionClass {
  Vector direction;
  Vector member;
};

std::vector<DirectionClass> direction_classes(const VectorSet& s) {
  std::vector<DirectionClass> out;
  for (const Vector& v : s.vectors()) {
    if (v.is_zero()) continue;
    Vector d = v.normalized();
    auto same = [&](const DirectionClass& c) { return c.direction == d; };
    if (std::none_of(out.begin(), out.end(), same)) {
      out.push_back({std::move(d), v});
    }
  }
  return out;
}

Vector default_member(const VectorSet& s) {
  return s.is_finite() ? s.vectors().front() : s.space().basis().row(0);
}

void normalize_leading(std::vector<Scalar>& coeffs) {
  for (const Scalar& c : coeffs) {
    if (c.is_zero()) continue;
    Scalar inv = c.inverse();
    for (Scalar& x : coeffs) x *= inv;
    return;
  }
}

// Witness for a family whose `choice` (direction index per finite set, in
// label order) is known to be dependent together with the punctured spaces.
DependenceWitness witness_for_choice(
    const SetFamily& family,
    const std::vector<std::vector<DirectionClass>>& classes,
    const std::vector<std::size_t>& choice) {
  const FieldSpec& field = family.field();
  const std::size_t l = family.ambient_dim();
  std::vector<Vector> generators;
  std::vector<std::size_t> block_start;
  for (std::size_t i = 0; i < family.size(); ++i) {
    block_start.push_back(generators.size());
    if (family[i].is_finite()) {
      generators.push_back(classes[i][choice[i]].member);
    } else {
      for (Vector& b : family[i].space().basis_vectors()) {
        generators.push_back(std::move(b));
      }
    }
  }
  block_start.push_back(generators.size());

  std::vector<Vector> kernel =
      nullspace(Matrix::from_columns(field, l, generators));
  std::vector<Scalar> c = kernel.front().coords();
  normalize_leading(c);

  DependenceWitness w;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::size_t begin = block_start[i];
    const std::size_t end = block_start[i + 1];
    if (family[i].is_finite()) {
      w.selection.push_back(generators[begin]);
      w.coefficients.push_back(c[begin]);
      continue;
    }
    Vector u(field, l);
    for (std::size_t j = begin; j < end; ++j) u.add_scaled(c[j], generators[j]);
    if (u.is_zero()) {
      w.selection.push_back(generators[begin]);
      w.coefficients.push_back(Scalar::zero(field));
    } else {
      w.selection.push_back(std::move(u));
      w.coefficients.push_back(Scalar::one(field));
    }
  }
  return w;
}

class SelectionSearch {
 public:
  SelectionSearch(const SetFamily& family, const LisfOptions& options)
      : family_(family),
        options_(options),
        basis_(family.field(), family.ambient_dim()) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].is_finite()) {
        classes_.push_back(direction_classes(family[i]));
        finite_order_.push_back(i);
      } else {
        classes_.emplace_back();
      }
    }
    choice_.assign(family.size(), 0);
  }

  // Returns true when some choice is dependent; choice_ then holds the
  // lexicographically least such choice.
  bool find_dependent_choice() {
    for (std::size_t i = 0; i < family_.size(); ++i) {
      if (!family_[i].is_punctured()) continue;
      for (const Vector& b : family_[i].space().basis_vectors()) {
        if (!basis_.insert(b)) return true;
      }
    }
    return descend(0);
  }

  DependenceWitness witness() const {
    return witness_for_choice(family_, classes_, choice_);
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == finite_order_.size()) return false;
    const std::size_t set = finite_order_[depth];
    const auto& options = classes_[set];
    for (std::size_t k = 0; k < options.size(); ++k) {
      if (++visited_ > options_.max_selections) {
        throw BudgetExceeded(0, options_.max_selections);
      }
      choice_[set] = k;
      if (!basis_.insert(options[k].direction)) {
        reset_below(depth);
        return true;
      }
      bool dependent = descend(depth + 1);
      if (dependent) return true;
      basis_.pop();
    }
    choice_[set] = 0;
    return false;
  }

  void reset_below(std::size_t depth) {
    for (std::size_t d = depth + 1; d < finite_order_.size(); ++d) {
      choice_[finite_order_[d]] = 0;
    }
  }

  const SetFamily& family_;
  const LisfOptions& options_;
  IncrementalBasis basis_;
  std::vector<std::vector<DirectionClass>> classes_;
  std::vector<std::size_t> finite_order_;
  std::vector<std::size_t> choice_;
  std::uint64_t visited_ = 0;
};

}  // namespace

LisfVerdict is_lisf(const SetFamily& family, const LisfOptions& options) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].contains_zero()) continue;
    DependenceWitness w;
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (j == i) {
        w.selection.emplace_back(family.field(), family.ambient_dim());
        w.coefficients.push_back(Scalar::one(family.field()));
      } else {
        w.selection.push_back(default_member(family[j]));
        w.coefficients.push_back(Scalar::zero(family.field()));
      }
    }
    return {false, std::move(w)};
  }
  SelectionSearch search(family, options);
  if (!search.find_dependent_choice()) return {true, std::nullopt};
  return {false, search.witness()};
}

std::string explain_witness_failure(const SetFamily& family,
                                    const DependenceWitness& witness) {
  if (witness.selection.size() != family.size() ||
      witness.coefficients.size() != family.size()) {
    return "witness has " + std::to_string(witness.selection.size()) +
           " vectors and " + std::to_string(witness.coefficients.size()) +
           " coefficients for " + std::to_string(family.size()) + " sets";
  }
  if (std::all_of(witness.coefficients.begin(), witness.coefficients.end(),
                  [](const Scalar& c) { return c.is_zero(); })) {
    return "all coefficients are zero";
  }
  Vector sum(family.field(), family.ambient_dim());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Vector& v = witness.selection[i];
    if (!family[i].contains(v)) {
      return "vector " + v.to_string() + " is not a member of set " +
             std::to_string(i + 1);
    }
    if (!(witness.coefficients[i].field() == family.field())) {
      return "coefficient " + std::to_string(i + 1) + " is over another field";
    }
    sum.add_scaled(witness.coefficients[i], v);
  }
  if (!sum.is_zero()) return "combination is " + sum.to_string() + ", not 0";
  return {};
}

bool verify_witness(const SetFamily& family, const DependenceWitness& witness) {
  return explain_witness_failure(family, witness).empty();
}

std::optional<DependenceWitness> dependence_among(
    std::span<const Vector> selection, const FieldSpec& field,
    std::size_t ambient_dim) {
  std::vector<Vector> kernel =
      nullspace(Matrix::from_columns(field, ambient_dim, selection));
  if (kernel.empty()) return std::nullopt;
  DependenceWitness w;
  w.selection.assign(selection.begin(), selection.end());
  w.coefficients = kernel.front().coords();
  normalize_leading(w.coefficients);
  return w;
}

SampledVerdict is_lisf_sampled(const SetFamily& family, std::uint64_t trials,
                               std::uint64_t seed,
                               const SamplingOptions& options) {
  SampledVerdict verdict;
  const std::size_t n = family.size();
  if (n == 0) {
    verdict.exhaustive = true;
    return verdict;
  }

  // Mixed-radix counter over finite sets when their product fits in the
  // trial budget.
  std::uint64_t product = 1;
  bool any_punctured = false;
  for (const VectorSet& s : family.sets()) {
    if (s.is_punctured()) {
      any_punctured = true;
      continue;
    }
    const std::uint64_t size = s.vectors().size();
    if (product > std::numeric_limits<std::uint64_t>::max() / size) {
      product = std::numeric_limits<std::uint64_t>::max();
    } else {
      product *= size;
    }
  }
  const bool enumerate = product <= trials;
  verdict.exhaustive = enumerate && !any_punctured;
  const std::uint64_t rounds = verdict.exhaustive ? product : trials;

  Rng rng(seed);
  std::vector<Vector> selection(n);
  for (std::uint64_t t = 0; t < rounds; ++t) {
    std::uint64_t counter = enumerate ? t % product : 0;
    for (std::size_t i = 0; i < n; ++i) {
      const VectorSet& s = family[i];
      if (s.is_punctured()) {
        selection[i] = random_nonzero_in(s.space(), rng, options.coeff_bound);
      } else if (enumerate) {
        const std::uint64_t size = s.vectors().size();
        selection[i] = s.vectors()[counter % size];
        counter /= size;
      } else {
        selection[i] = s.vectors()[rng.index(s.vectors().size())];
      }
    }
    ++verdict.selections_tested;
    if (is_linearly_independent(selection)) continue;
    verdict.dependence_found = true;
    verdict.witness =
        dependence_among(selection, family.field(), family.ambient_dim());
    return verdict;
  }
  return verdict;
}

}  // namespace lisfmat
