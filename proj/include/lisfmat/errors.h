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

#ifndef LISFMAT_ERRORS_H_
#define LISFMAT_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lisfmat {

// Base of every error thrown by the library. Callers that only need a
// message can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what)
      : Error("field mismatch: " + what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error("dimension mismatch: " + what) {}
};

class ZeroSubspace : public Error {
 public:
  ZeroSubspace() : Error("operation requires a nonzero subspace") {}
};

class ZeroScale : public Error {
 public:
  explicit ZeroScale(std::size_t index)
      : Error("scale factor " + std::to_string(index) + " is zero") {}
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("matrix is not invertible") {}
};

class GroundTooLarge : public Error {
 public:
  explicit GroundTooLarge(std::size_t n)
      : Error("ground set of size " + std::to_string(n) +
              " exceeds the exhaustive limit of 24") {}
};

class NotDownwardClosed : public Error {
 public:
  NotDownwardClosed()
      : Error("family fails I.1 or I.2; circuits are undefined") {}
};

class HypothesesNotMet : public Error {
 public:
  explicit HypothesesNotMet(const std::string& what)
      : Error("hypotheses not met: " + what) {}
};

// Raised when a LISF decision would visit more selections than allowed.
// `subset` is the label bitmask of the subfamily being decided (0 when the
// whole family was being checked directly).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint32_t subset, std::uint64_t budget)
      : Error("selection budget of " + std::to_string(budget) +
              " exceeded"),
        subset_(subset) {}

  std::uint32_t subset() const { return subset_; }

 private:
  std::uint32_t subset_;
};

class ParamError : public Error {
 public:
  explicit ParamError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace lisfmat

#endif  // LISFMAT_ERRORS_H_
