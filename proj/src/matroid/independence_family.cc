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

#include "lisfmat/matroid/independence_family.h"

#include <algorithm>
#include <bit>

#include "lisfmat/errors.h"

namespace lisfmat {

std::size_t cardinality(LabelSet s) {
  return static_cast<std::size_t>(std::popcount(s));
}

std::vector<std::size_t> labels_of(LabelSet s) {
  std::vector<std::size_t> out;
  for (std::size_t label = 1; s != 0; ++label, s >>= 1) {
    if (s & 1) out.push_back(label);
  }
  return out;
}

LabelSet from_labels(std::span<const std::size_t> labels) {
  LabelSet s = 0;
  for (std::size_t label : labels) {
    if (label == 0 || label > 32) {
      throw ParamError("label " + std::to_string(label) + " out of range");
    }
    s |= label_bit(label);
  }
  return s;
}

bool canonical_less(LabelSet a, LabelSet b) {
  const std::size_t ca = cardinality(a);
  const std::size_t cb = cardinality(b);
  if (ca != cb) return ca < cb;
  const LabelSet diff = a ^ b;
  if (diff == 0) return false;
  // The smallest label where the two sorted lists part ways belongs to the
  // lexicographically smaller one.
  return (a & (diff & -diff)) != 0;
}

std::string format_set(LabelSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t label : labels_of(s)) {
    if (!first) out += ",";
    out += std::to_string(label);
    first = false;
  }
  return out + "}";
}

std::string format_sets(std::span<const LabelSet> sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_set(sets[i]);
  }
  return out + "}";
}

IndependenceFamily::IndependenceFamily(std::size_t n,
                                       std::vector<LabelSet> members)
    : n_(n), members_(std::move(members)) {
  if (n_ == 0) throw ParamError("ground set must have at least one label");
  if (n_ > kMaxGroundSize) throw GroundTooLarge(n_);
  const LabelSet universe = full_set(n_);
  bitmap_.assign(std::size_t{1} << n_, false);
  for (LabelSet s : members_) {
    if ((s & ~universe) != 0) {
      throw ParamError("member " + format_set(s) + " is not a subset of {1.." +
                       std::to_string(n_) + "}");
    }
    bitmap_[s] = true;
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

IndependenceFamily IndependenceFamily::from_label_lists(
    std::size_t n, const std::vector<std::vector<std::size_t>>& members) {
  std::vector<LabelSet> sets;
  sets.reserve(members.size());
  for (const auto& m : members) sets.push_back(from_labels(m));
  return IndependenceFamily(n, std::move(sets));
}

LabelSet permute_set(LabelSet s, std::span<const std::size_t> perm) {
  LabelSet out = 0;
  for (std::size_t label : labels_of(s)) out |= label_bit(perm[label - 1]);
  return out;
}

IndependenceFamily permute_labels(const IndependenceFamily& family,
                                  std::span<const std::size_t> perm) {
  if (perm.size() != family.ground_size()) {
    throw ParamError("permutation length does not match ground size");
  }
  std::vector<LabelSet> image;
  image.reserve(family.members().size());
  for (LabelSet s : family.members()) image.push_back(permute_set(s, perm));
  return IndependenceFamily(family.ground_size(), std::move(image));
}

}  // namespace lisfmat
