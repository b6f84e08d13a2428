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

#include "lisfmat/exactalg/linalg.h"

#include <utility>

#include "lisfmat/errors.h"

namespace lisfmat {
namespace {

void require_same(const Vector& a, const Vector& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch(a.field().to_string() + " vs " +
                        b.field().to_string());
  }
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
}

}  // namespace

Vector::Vector(FieldSpec field, std::size_t dim)
    : field_(field), coords_(dim, Scalar::zero(field)) {}

Vector::Vector(FieldSpec field, std::vector<Scalar> coords)
    : field_(field), coords_(std::move(coords)) {
  for (const Scalar& c : coords_) {
    if (!(c.field() == field_)) {
      throw FieldMismatch("coordinate over " + c.field().to_string() +
                          " in vector over " + field_.to_string());
    }
  }
}

Vector Vector::of(FieldSpec field, std::initializer_list<long> coords) {
  std::vector<Scalar> out;
  out.reserve(coords.size());
  for (long c : coords) out.emplace_back(field, c);
  return Vector(field, std::move(out));
}

bool Vector::is_zero() const { return leading_index() == coords_.size(); }

std::size_t Vector::leading_index() const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) return i;
  }
  return coords_.size();
}

Vector Vector::normalized() const {
  std::size_t lead = leading_index();
  if (lead == coords_.size()) return *this;
  return coords_[lead].inverse() * *this;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (Scalar& c : r.coords_) c = -c;
  return r;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  if (!(c.field() == v.field())) {
    throw FieldMismatch(c.field().to_string() + " vs " +
                        v.field().to_string());
  }
  Vector r = v;
  for (Scalar& x : r.coords_) x = c * x;
  return r;
}

Vector& Vector::add_scaled(const Scalar& c, const Vector& v) {
  require_same(*this, v);
  if (c.is_zero()) return *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!v[i].is_zero()) coords_[i] += c * v[i];
  }
  return *this;
}

bool operator==(const Vector& a, const Vector& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols,
                         std::span<const Vector> rows) {
  require_shape(rows, field, cols);
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows,
                            std::span<const Vector> columns) {
  require_shape(columns, field, rows);
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::of(FieldSpec field,
                  std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(field, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("ragged matrix literal");
    std::size_t c = 0;
    for (long x : row) m.at(r, c++) = Scalar(field, x);
    ++r;
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(entries_.begin() + r * cols_,
                                            entries_.begin() + (r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return Vector(field_, std::move(out));
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (!(m.field_ == v.field())) throw FieldMismatch("matrix-vector product");
  if (m.cols_ != v.size()) {
    throw DimensionMismatch("matrix has " + std::to_string(m.cols_) +
                            " columns, vector has length " +
                            std::to_string(v.size()));
  }
  std::vector<Scalar> out(m.rows_, Scalar::zero(m.field_));
  for (std::size_t r = 0; r < m.rows_; ++r) {
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (!v[c].is_zero()) out[r] += m.at(r, c) * v[c];
    }
  }
  return Vector(m.field_, std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product");
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) out += ", ";
    out += row(r).to_string();
  }
  return out + "]";
}

RrefResult rref(const Matrix& m) {
  RrefResult result{m, 0, {}};
  Matrix& a = result.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && a.at(found, col).is_zero()) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t c = col; c < cols; ++c) {
        std::swap(a.at(found, c), a.at(pivot_row, c));
      }
    }
    Scalar inv = a.at(pivot_row, col).inverse();
    for (std::size_t c = col; c < cols; ++c) {
      a.at(pivot_row, c) = inv * a.at(pivot_row, c);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (!a.at(pivot_row, c).is_zero()) {
          a.at(r, c) -= factor * a.at(pivot_row, c);
        }
      }
    }
    result.pivot_cols.push_back(col);
    ++pivot_row;
  }
  result.rank = pivot_row;
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

void require_shape(std::span<const Vector> vectors, const FieldSpec& field,
                   std::size_t dim) {
  for (const Vector& v : vectors) {
    if (!(v.field() == field)) {
      throw FieldMismatch("vector over " + v.field().to_string() +
                          ", expected " + field.to_string());
    }
    if (v.size() != dim) {
      throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                              ", expected " + std::to_string(dim));
    }
  }
}

bool is_linearly_independent(std::span<const Vector> vectors) {
  if (vectors.empty()) return true;
  const FieldSpec& field = vectors.front().field();
  const std::size_t dim = vectors.front().size();
  require_shape(vectors, field, dim);
  if (vectors.size() > dim) return false;
  IncrementalBasis basis(field, dim);
  for (const Vector& v : vectors) {
    if (!basis.insert(v)) return false;
  }
  return true;
}

std::vector<Vector> nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
    x[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      x[r.pivot_cols[i]] = -r.reduced.at(i, free);
    }
    basis.emplace_back(m.field(), std::move(x));
  }
  return basis;
}

IncrementalBasis::IncrementalBasis(FieldSpec field, std::size_t dim)
    : field_(field), dim_(dim) {}

Vector IncrementalBasis::reduce(const Vector& v) const {
  Vector w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = w[pivots_[i]];
    if (!c.is_zero()) w.add_scaled(-c, rows_[i]);
  }
  return w;
}

bool IncrementalBasis::insert(const Vector& v) {
  const Vector one[] = {v};
  require_shape(one, field_, dim_);
  Vector w = reduce(v);
  std::size_t lead = w.leading_index();
  if (lead == dim_) return false;
  rows_.push_back(w[lead].inverse() * w);
  pivots_.push_back(lead);
  return true;
}

void IncrementalBasis::pop() {
  rows_.pop_back();
  pivots_.pop_back();
}

bool IncrementalBasis::contains(const Vector& v) const {
  const Vector one[] = {v};
  require_shape(one, field_, dim_);
  return reduce(v).is_zero();
}

}  // namespace lisfmat
