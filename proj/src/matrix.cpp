/*
 * Copyright 2026 The adhmquot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "adhmquot/matrix.hpp"

#include <algorithm>
#include <string>

namespace adhmquot {

namespace {

void require_same_field(Field a, Field b) {
  if (a != b) throw ScalarModeError("mixed scalar modes: " + a.name() + " and " + b.name());
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Vector zero_vector(std::size_t n, Field f) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(std::size_t n, std::size_t i, Field f) {
  Vector v = zero_vector(n, f);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  if (a.empty()) return Scalar{};
  Scalar acc = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows, Field f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      require_same_field(f, rows[i][j].field());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> cols, Field f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows, Field f) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(rows.size(), cols, f);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw ShapeError("ragged rows");
    std::size_t j = 0;
    for (long x : row) m(i, j++) = Scalar::from_int(f, x);
    ++i;
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, std::span<const Scalar> v) {
  if (v.size() != rows_) throw ShapeError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) {
    require_same_field(field_, v[i].field());
    (*this)(i, j) = v[i];
  }
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& block) {
  if (row0 + block.rows() > rows_ || col0 + block.cols() > cols_) {
    throw ShapeError("block " + shape(block) + " does not fit into " + shape(*this));
  }
  require_same_field(field_, block.field());
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(row0 + i, col0 + j) = block(i, j);
  }
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw ShapeError("block out of range");
  Matrix out(rows, cols, field_);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool Matrix::is_zero() const { return adhmquot::is_zero(data_); }

Matrix Matrix::reduce(Field target) const {
  Matrix out(rows_, cols_, target);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].reduce(target);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum " + shape(*this) + " + " + shape(rhs));
  require_same_field(field_, rhs.field_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix difference " + shape(*this) + " - " + shape(rhs));
  require_same_field(field_, rhs.field_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product " + shape(a) + " * " + shape(b));
  require_same_field(a.field_, b.field_);
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  require_same_field(s.field(), m.field_);
  for (auto& x : m.data_) x *= s;
  return m;
}

Vector operator*(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols_ != v.size()) throw ShapeError("matrix-vector product " + shape(a) + " * " + std::to_string(v.size()));
  Vector out = zero_vector(a.rows_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack " + shape(a) + " | " + shape(b));
  Matrix out(a.rows(), a.cols() + b.cols(), a.field());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack " + shape(a) + " / " + shape(b));
  Matrix out(a.rows() + b.rows(), a.cols(), a.field());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix power(const Matrix& m, std::size_t k) {
  if (m.rows() != m.cols()) throw ShapeError("power of non-square " + shape(m));
  Matrix result = Matrix::identity(m.rows(), m.field());
  for (std::size_t i = 0; i < k; ++i) result = result * m;
  return result;
}

Echelon rref(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
    }
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Subspace kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(cols, m.field());
    x[f] = Scalar::one(m.field());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(x));
  }
  return Subspace::span(cols, basis, m.field());
}

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
  if (a.rows() != b.size()) throw ShapeError("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1, a.field());
  aug.set_block(0, 0, a);
  aug.set_column(a.cols(), b);
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.cols(), a.field());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, a.cols());
  return x;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: right-hand side rows mismatch");
  Echelon e = rref(hstack(a, b));
  for (auto p : e.pivots) {
    if (p >= a.cols()) return std::nullopt;
  }
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square " + shape(m));
  Echelon e = rref(hstack(m, Matrix::identity(m.rows(), m.field())));
  if (e.rank() < m.rows() || (m.rows() > 0 && e.pivots[m.rows() - 1] >= m.rows())) return std::nullopt;
  return e.reduced.block(0, m.rows(), m.rows(), m.rows());
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of non-square " + shape(m));
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(m.field());
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar factor = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

Subspace::Subspace(std::size_t ambient_dim, Field f) : basis_(0, ambient_dim, f) {}

Subspace Subspace::full(std::size_t ambient_dim, Field f) {
  return span_rows(Matrix::identity(ambient_dim, f));
}

Subspace Subspace::from_echelon(const Echelon& e) {
  Subspace s(e.reduced.block(0, 0, e.rank(), e.reduced.cols()));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::span_rows(const Matrix& rows) { return from_echelon(rref(rows)); }

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors, Field f) {
  return span_rows(Matrix::from_rows(ambient_dim, vectors, f));
}

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.emplace_back(basis_.row(i).begin(), basis_.row(i).end());
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw ShapeError("vector length does not match ambient dimension");
  // Reduce v against the RREF basis; v is inside iff the remainder vanishes.
  Vector rem(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Scalar coeff = rem[pivots_[k]];
    if (coeff.is_zero()) continue;
    for (std::size_t j = 0; j < rem.size(); ++j) {
      if (!basis_(k, j).is_zero()) rem[j] -= coeff * basis_(k, j);
    }
  }
  return adhmquot::is_zero(rem);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw ShapeError("subspace sum across ambient dimensions");
  return span_rows(vstack(basis_, other.basis_));
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != ambient_dim()) throw ShapeError("operator does not act on the ambient space");
  return span_rows((m * basis_.transpose()).transpose());
}

bool Subspace::is_invariant(const Matrix& m) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!contains(m * basis_.row(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw ShapeError("vector is not in the subspace");
  // In RREF the pivot entries of v are exactly its coordinates.
  Vector coords;
  coords.reserve(dim());
  for (auto p : pivots_) coords.push_back(v[p]);
  return coords;
}

bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

Subspace kernel_within(const Subspace& s, const Matrix& op) {
  // solved in the coordinates of s
  const Matrix basis = s.basis_columns();
  Subspace coords = kernel_basis(op * basis);
  std::vector<Vector> vs;
  for (const auto& y : coords.vectors()) vs.push_back(basis * y);
  return Subspace::span(s.ambient_dim(), vs, s.field());
}

Matrix restriction(const Subspace& s, const Matrix& op) {
  Matrix out(s.dim(), s.dim(), s.field());
  const auto vs = s.vectors();
  for (std::size_t k = 0; k < vs.size(); ++k) out.set_column(k, s.coordinates(op * vs[k]));
  return out;
}

}  // namespace adhmquot
