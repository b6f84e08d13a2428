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

// Instance files are JSON documents:
//
//   {
//     "field": "Q",                      // or "GF(p)"
//     "ambient_dim": 3,
//     "sets": [
//       {"finite": [["1", "0", "0"], ["1/2", "1", "0"]]},
//       {"punctured_subspace": [["0", "0", "1"]]}
//     ],
//     "decomposition": {                 // optional
//       "n": 1,
//       "summands": [[["1", "0", "0"]], [["0", "1", "0"]]]
//     }
//   }
//
// Scalars are strings "a" or "a/b" (b > 0); plain JSON integers are also
// accepted. Prime-field entries must be integers. Punctured subspaces and
// summands are given by spanning vectors and written back as their reduced
// row echelon bases.

#ifndef LISFMAT_CLI_INSTANCE_FILE_H_
#define LISFMAT_CLI_INSTANCE_FILE_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lisfmat/constructions/constructions.h"
#include "lisfmat/setfamily/set_family.h"

namespace lisfmat {

struct Instance {
  SetFamily family;
  std::optional<DirectSumDecomposition> decomposition;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws ParseError naming the JSON location ("sets[1].finite[0][2]") or
// the parser's line/column.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

std::string serialize_instance(const Instance& instance);

nlohmann::ordered_json vector_to_json(const Vector& v);
nlohmann::ordered_json scalar_to_json(const Scalar& s);

}  // namespace lisfmat

#endif  // LISFMAT_CLI_INSTANCE_FILE_H_
