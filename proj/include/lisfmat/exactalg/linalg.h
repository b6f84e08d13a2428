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

#ifndef LISFMAT_EXACTALG_LINALG_H_
#define LISFMAT_EXACTALG_LINALG_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lisfmat/exactalg/scalar.h"

namespace lisfmat {

// A coordinate vector in field^l. The length is the ambient dimension.
class Vector {
 public:
  Vector() = default;
  // The zero vector of length `dim`.
  Vector(FieldSpec field, std::size_t dim);
  // Throws FieldMismatch if a coordinate is over another field.
  Vector(FieldSpec field, std::vector<Scalar> coords);

  // Convenience for tests and built-in families: integer coordinates.
  static Vector of(FieldSpec field, std::initializer_list<long> coords);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const;
  // Index of the first nonzero coordinate, or size() for the zero vector.
  std::size_t leading_index() const;
  // Projective representative: the first nonzero coordinate scaled to 1.
  // The zero vector is returned unchanged.
  Vector normalized() const;

  Vector operator-() const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Scalar& c, const Vector& v);
  Vector& add_scaled(const Scalar& c, const Vector& v);

  friend bool operator==(const Vector& a, const Vector& b);

  // "(1, 1/2, 0)"
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::vector<Scalar> coords_;
};

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  // Rows must share `cols` as their length. An empty row list gives a
  // 0 x cols matrix.
  static Matrix from_rows(FieldSpec field, std::size_t cols,
                          std::span<const Vector> rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows,
                             std::span<const Vector> columns);
  static Matrix of(FieldSpec field,
                   std::initializer_list<std::initializer_list<long>> rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;
  Matrix transpose() const;

  friend Vector operator*(const Matrix& m, const Vector& v);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix reduced;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan elimination taking the first nonzero entry of each column as
// pivot.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// True iff the vectors, stacked as rows, have full row rank. The empty list
// is independent.
bool is_linearly_independent(std::span<const Vector> vectors);

// Basis of {x : m * x = 0}, one vector per free column, with a 1 in that
// free column.
std::vector<Vector> nullspace(const Matrix& m);

// Throws FieldMismatch/DimensionMismatch unless every vector is over `field`
// with length `dim`.
void require_shape(std::span<const Vector> vectors, const FieldSpec& field,
                   std::size_t dim);

// Semi-echelon basis built one vector at a time. Rows are never reduced
// against later rows, so pop() undoes the last insert exactly. Used for
// depth-first enumeration of selections.
class IncrementalBasis {
 public:
  IncrementalBasis(FieldSpec field, std::size_t dim);

  // Appends v if it is independent of the current rows. Returns false (and
  // leaves the basis untouched) otherwise.
  bool insert(const Vector& v);
  void pop();
  std::size_t size() const { return rows_.size(); }
  bool contains(const Vector& v) const;

 private:
  Vector reduce(const Vector& v) const;

  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vector> rows_;  // pivot entry is 1
  std::vector<std::size_t> pivots_;
};

}  // namespace lisfmat

#endif  // LISFMAT_EXACTALG_LINALG_H_
