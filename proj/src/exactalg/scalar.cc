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

#include "lisfmat/exactalg/scalar.h"

#include <charconv>

#include "lisfmat/errors.h"

namespace lisfmat {
namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch(a.field().to_string() + " vs " +
                        b.field().to_string());
  }
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    throw ParamError("GF(" + std::to_string(p) +
                     "): modulus must be a prime below 2^31");
  }
  return FieldSpec(Kind::kPrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string_view digits = text.substr(3, text.size() - 4);
    std::uint64_t p = 0;
    if (all_digits(digits) && digits.size() <= 12) {
      std::from_chars(digits.data(), digits.data() + digits.size(), p);
      return prime(p);
    }
  }
  throw ParseError("invalid field '" + std::string(text) +
                   "' (expected Q or GF(p))");
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_rational()) {
    rational_ = value;
  } else {
    long p = static_cast<long>(field_.modulus());
    long r = value % p;
    if (r < 0) r += p;
    residue_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    rational_ = value;
    rational_.canonicalize();
    return;
  }
  std::uint32_t p = field_.modulus();
  std::uint32_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) throw DivisionByZero();
  std::uint64_t num = reduce_mpz(value.get_num(), p);
  residue_ = static_cast<std::uint32_t>(num * mod_pow(den, p - 2, p) % p);
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  auto bad = [&](const char* why) {
    return ParseError("invalid scalar '" + std::string(text) + "': " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::size_t slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw bad("expected integer or integer/positive-integer");
  }
  if (!field.is_rational() && slash != std::string_view::npos) {
    throw bad("prime-field elements are written as integers");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw bad("zero denominator");
  if (negative) num = -num;
  return Scalar(field, mpq_class(num, den));
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    r.rational_ = -rational_;
  } else if (residue_ != 0) {
    r.residue_ = field_.modulus() - residue_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r = *this;
  if (field_.is_rational()) {
    r.rational_ = 1 / rational_;
  } else {
    r.residue_ = mod_pow(residue_, field_.modulus() - 2, field_.modulus());
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar r = a;
  if (a.field_.is_rational()) {
    r.rational_ = a.rational_ + b.rational_;
  } else {
    r.residue_ = static_cast<std::uint32_t>(
        (std::uint64_t{a.residue_} + b.residue_) % a.field_.modulus());
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar r = a;
  if (a.field_.is_rational()) {
    r.rational_ = a.rational_ * b.rational_;
  } else {
    r.residue_ = static_cast<std::uint32_t>(
        std::uint64_t{a.residue_} * b.residue_ % a.field_.modulus());
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.rational_ == b.rational_
                                : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  if (!field_.is_rational()) return std::to_string(residue_);
  if (rational_.get_den() == 1) return rational_.get_num().get_str();
  return rational_.get_str();
}

}  // namespace lisfmat
