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

#ifndef LISFMAT_EXACTALG_SCALAR_H_
#define LISFMAT_EXACTALG_SCALAR_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lisfmat {

// The field all scalars of a computation live in: either the rationals or a
// prime field GF(p) with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { kRationals, kPrimeField };

  // Defaults to the rationals.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  // Throws ParamError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  // Accepts "Q" or "GF(p)".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::kRationals; }
  // 0 for the rationals.
  std::uint32_t characteristic() const { return modulus_; }
  std::uint32_t modulus() const { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t modulus)
      : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::kRationals;
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t p);

// An exact field element. Rationals are kept in lowest terms with a positive
// denominator (gmp canonical form); prime-field elements as residues in
// [0, p). Equality is structural.
class Scalar {
 public:
  // Rational zero.
  Scalar() = default;
  Scalar(FieldSpec field, long value);
  // For GF(p) the rational is mapped through num * den^{-1} mod p; throws
  // DivisionByZero if p divides the denominator.
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0L); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }

  // Grammar: -?[0-9]+ ( "/" [0-9]+ )?, denominator nonzero. Over GF(p) only
  // the integer form is accepted; negative integers are reduced mod p.
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Only valid for the matching field kind.
  const mpq_class& rational() const { return rational_; }
  std::uint32_t residue() const { return residue_; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // "a/b" or "a" for rationals, decimal residue for GF(p).
  std::string to_string() const;

 private:
  FieldSpec field_;
  mpq_class rational_;
  std::uint32_t residue_ = 0;
};

}  // namespace lisfmat

#endif  // LISFMAT_EXACTALG_SCALAR_H_
