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

#include "lisfmat/cli/instance_file.h"

#include <fstream>
#include <sstream>

#include "lisfmat/errors.h"

namespace lisfmat {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

// Message of a nested error without its own "parse error: " prefix.
std::string bare(const Error& e) {
  constexpr std::string_view kPrefix = "parse error: ";
  std::string_view what = e.what();
  if (what.starts_with(kPrefix)) what.remove_prefix(kPrefix.size());
  return std::string(what);
}

const json& require_key(const json& obj, const char* key,
                        const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

Scalar parse_scalar(const json& node, const FieldSpec& field,
                    const std::string& where) {
  try {
    if (node.is_string()) return Scalar::parse(field, node.get<std::string>());
    if (node.is_number_integer()) {
      return Scalar::parse(field, node.dump());
    }
  } catch (const ParseError& e) {
    fail(where, bare(e));
  } catch (const DivisionByZero&) {
    fail(where, "value is not defined in " + field.to_string());
  }
  fail(where, "expected a scalar string such as \"3\" or \"-1/2\"");
}

Vector parse_vector(const json& node, const FieldSpec& field, std::size_t dim,
                    const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array of scalars");
  if (node.size() != dim) {
    fail(where, "vector has " + std::to_string(node.size()) +
                    " coordinates, ambient_dim is " + std::to_string(dim));
  }
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < node.size(); ++i) {
    coords.push_back(
        parse_scalar(node[i], field, where + "[" + std::to_string(i) + "]"));
  }
  return Vector(field, std::move(coords));
}

std::vector<Vector> parse_vectors(const json& node, const FieldSpec& field,
                                  std::size_t dim, const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(parse_vector(node[i], field, dim,
                               where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::size_t parse_positive(const json& node, const std::string& where) {
  if (!node.is_number_integer() || node.get<long long>() < 1) {
    fail(where, "expected a positive integer");
  }
  return node.get<std::size_t>();
}

VectorSet parse_set(const json& node, const FieldSpec& field, std::size_t dim,
                    const std::string& where) {
  if (!node.is_object() || node.size() != 1) {
    fail(where,
         "expected {\"finite\": [...]} or {\"punctured_subspace\": [...]}");
  }
  if (node.contains("finite")) {
    const std::string here = where + ".finite";
    std::vector<Vector> vs = parse_vectors(node["finite"], field, dim, here);
    if (vs.empty()) fail(here, "finite set must be nonempty");
    return VectorSet::finite(std::move(vs));
  }
  if (node.contains("punctured_subspace")) {
    const std::string here = where + ".punctured_subspace";
    std::vector<Vector> vs =
        parse_vectors(node["punctured_subspace"], field, dim, here);
    Subspace space = Subspace::span(field, dim, vs);
    if (space.dim() == 0) fail(here, "spanning vectors span only {0}");
    return VectorSet::punctured(std::move(space));
  }
  fail(where, "unknown set kind (use \"finite\" or \"punctured_subspace\")");
}

std::string dump_vectors(const std::vector<Vector>& vs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Vector& v : vs) arr.push_back(vector_to_json(v));
  return arr.dump();
}

}  // namespace

nlohmann::ordered_json scalar_to_json(const Scalar& s) { return s.to_string(); }

nlohmann::ordered_json vector_to_json(const Vector& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Scalar& c : v.coords()) arr.push_back(scalar_to_json(c));
  return arr;
}

Instance parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!root.is_object()) fail("<root>", "expected a JSON object");

  const json& field_node = require_key(root, "field", "<root>");
  if (!field_node.is_string()) fail("field", "expected \"Q\" or \"GF(p)\"");
  FieldSpec field;
  try {
    field = FieldSpec::parse(field_node.get<std::string>());
  } catch (const Error& e) {
    fail("field", bare(e));
  }
  const std::size_t dim =
      parse_positive(require_key(root, "ambient_dim", "<root>"), "ambient_dim");

  const json& sets_node = require_key(root, "sets", "<root>");
  if (!sets_node.is_array()) fail("sets", "expected an array");
  std::vector<VectorSet> sets;
  for (std::size_t i = 0; i < sets_node.size(); ++i) {
    sets.push_back(
        parse_set(sets_node[i], field, dim, "sets[" + std::to_string(i) + "]"));
  }
  Instance instance{SetFamily(field, dim, std::move(sets)), std::nullopt};

  if (root.contains("decomposition")) {
    const json& d = root["decomposition"];
    if (!d.is_object()) fail("decomposition", "expected an object");
    DirectSumDecomposition decomposition;
    decomposition.field = field;
    decomposition.ambient_dim = dim;
    decomposition.summand_dim =
        parse_positive(require_key(d, "n", "decomposition"), "decomposition.n");
    const json& summands = require_key(d, "summands", "decomposition");
    if (!summands.is_array() || summands.empty()) {
      fail("decomposition.summands", "expected a nonempty array");
    }
    for (std::size_t j = 0; j < summands.size(); ++j) {
      const std::string here =
          "decomposition.summands[" + std::to_string(j) + "]";
      decomposition.summands.push_back(Subspace::span(
          field, dim, parse_vectors(summands[j], field, dim, here)));
    }
    instance.decomposition = std::move(decomposition);
  }
  return instance;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
  const SetFamily& f = instance.family;
  std::ostringstream out;
  out << "{\n";
  out << "  \"field\": \"" << f.field().to_string() << "\",\n";
  out << "  \"ambient_dim\": " << f.ambient_dim() << ",\n";
  out << "  \"sets\": [";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n");
    if (f[i].is_finite()) {
      out << "    {\"finite\": " << dump_vectors(f[i].vectors()) << "}";
    } else {
      out << "    {\"punctured_subspace\": "
          << dump_vectors(f[i].space().basis_vectors()) << "}";
    }
  }
  out << (f.size() == 0 ? "]" : "\n  ]");
  if (instance.decomposition) {
    const DirectSumDecomposition& d = *instance.decomposition;
    out << ",\n  \"decomposition\": {\n";
    out << "    \"n\": " << d.summand_dim << ",\n";
    out << "    \"summands\": [";
    for (std::size_t j = 0; j < d.summands.size(); ++j) {
      out << (j == 0 ? "\n" : ",\n");
      out << "      " << dump_vectors(d.summands[j].basis_vectors());
    }
    out << "\n    ]\n  }";
  }
  out << "\n}\n";
  return out.str();
}

}  // namespace lisfmat
