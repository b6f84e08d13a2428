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

#ifndef LISFMAT_MATROID_INDEPENDENCE_FAMILY_H_
#define LISFMAT_MATROID_INDEPENDENCE_FAMILY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lisfmat {

// Subset of the ground set {1..n}: bit i-1 is set iff label i is present.
using LabelSet = std::uint32_t;

inline constexpr std::size_t kMaxGroundSize = 24;

inline LabelSet label_bit(std::size_t label) {
  return LabelSet{1} << (label - 1);
}
inline LabelSet full_set(std::size_t n) {
  return n >= 32 ? ~LabelSet{0} : (LabelSet{1} << n) - 1;
}
std::size_t cardinality(LabelSet s);
// Ascending labels.
std::vector<std::size_t> labels_of(LabelSet s);
LabelSet from_labels(std::span<const std::size_t> labels);

// Canonical order on subsets: by cardinality, then lexicographically on the
// ascending label lists. {} < {1} < {2} < {3} < {1,2} < {1,3} < ...
bool canonical_less(LabelSet a, LabelSet b);

// "{}", "{1,3}"
std::string format_set(LabelSet s);
// "{{}, {1}, {2}, {3}, {1,3}}"
std::string format_sets(std::span<const LabelSet> sets);

// An explicit collection of subsets of {1..n}. Members are deduplicated and
// kept in canonical order; membership is answered from a dense bitmap, which
// is why n is capped at kMaxGroundSize.
class IndependenceFamily {
 public:
  // Throws ParamError for n == 0 or a member outside {1..n}, GroundTooLarge
  // for n > kMaxGroundSize.
  IndependenceFamily(std::size_t n, std::vector<LabelSet> members);

  static IndependenceFamily from_label_lists(
      std::size_t n, const std::vector<std::vector<std::size_t>>& members);

  std::size_t ground_size() const { return n_; }
  const std::vector<LabelSet>& members() const { return members_; }
  bool contains(LabelSet s) const {
    return s < bitmap_.size() && bitmap_[s];
  }

  std::string to_string() const { return format_sets(members_); }

  friend bool operator==(const IndependenceFamily& a,
                         const IndependenceFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  std::size_t n_;
  std::vector<LabelSet> members_;
  std::vector<bool> bitmap_;
};

// Relabels through `perm`, where perm[i - 1] is the new label of label i.
LabelSet permute_set(LabelSet s, std::span<const std::size_t> perm);
IndependenceFamily permute_labels(const IndependenceFamily& family,
                                  std::span<const std::size_t> perm);

}  // namespace lisfmat

#endif  // LISFMAT_MATROID_INDEPENDENCE_FAMILY_H_
