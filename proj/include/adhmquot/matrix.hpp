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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "adhmquot/scalar.hpp"

namespace adhmquot {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, Field f);
Vector unit_vector(std::size_t n, std::size_t i, Field f);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix over a single field. Empty shapes (0×k, k×0) are
/// legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::rational());

  static Matrix identity(std::size_t n, Field f = Field::rational());
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows, Field f);
  static Matrix from_columns(std::size_t rows, std::span<const Vector> cols, Field f);
  /// Integer literal matrix, handy in tests.
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows,
                          Field f = Field::rational());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const Scalar> v);
  void set_block(std::size_t row0, std::size_t col0, const Matrix& block);
  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  Matrix transpose() const;
  bool is_zero() const;
  /// Maps every rational entry into the prime field `target`.
  Matrix reduce(Field target) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, std::size_t k);

/// Reduced row-echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

class Subspace;

/// Null space {x : m·x = 0} inside the column-index space.
Subspace kernel_basis(const Matrix& m);

/// Particular solution of a·x = b with every free variable set to zero.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

/// Solves a·X = b column by column; nullopt when any column is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// A linear subspace of F^ambient stored as an RREF basis, one vector per row.
/// The RREF basis is unique, so equality of subspaces is equality of bases.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, Field f = Field::rational());

  static Subspace full(std::size_t ambient_dim, Field f = Field::rational());
  /// Span of the rows of `rows`.
  static Subspace span_rows(const Matrix& rows);
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors, Field f);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  Field field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  /// Basis vectors as the columns of an ambient_dim × dim matrix.
  Matrix basis_columns() const { return basis_.transpose(); }
  std::vector<Vector> vectors() const;

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// m·S for a square m acting on the ambient space.
  Subspace image(const Matrix& m) const;
  bool is_invariant(const Matrix& m) const;
  /// Coordinates of v in the stored basis; throws if v is not in the subspace.
  Vector coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Matrix reduced_basis) : basis_(std::move(reduced_basis)) {}
  static Subspace from_echelon(const Echelon& e);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x ∈ s : op·x = 0}.
Subspace kernel_within(const Subspace& s, const Matrix& op);
/// Matrix of op on an op-invariant subspace s, in the coordinates of s's basis.
Matrix restriction(const Subspace& s, const Matrix& op);

}  // namespace adhmquot
