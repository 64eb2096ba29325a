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

// Matrices of linear forms in homogeneous coordinates z_0..z_n on P^n, with
// z_n = 0 the hyperplane at infinity, and the monad maps built from an ADHM
// datum. Orientation: a map between terms is a (target rows) × (source
// columns) matrix, so "target ∘ source" is the plain matrix product.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "adhmquot/adhm.hpp"

namespace adhmquot {

/// Σ_k coeffs[k]·z_k.
class LinearForm {
 public:
  LinearForm(std::size_t vars, Field f = Field::rational());
  explicit LinearForm(std::vector<Scalar> coeffs);

  std::size_t vars() const { return coeffs_.size(); }
  const Scalar& coeff(std::size_t k) const { return coeffs_.at(k); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  Scalar operator()(std::span<const Scalar> point) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

/// A rows × cols matrix of linear forms, stored as one scalar coefficient
/// matrix per variable: M = Σ_k M_k z_k.
class LinearFormMatrix {
 public:
  LinearFormMatrix(std::size_t rows, std::size_t cols, std::size_t vars, Field f = Field::rational());

  std::size_t rows() const { return coeff_.front().rows(); }
  std::size_t cols() const { return coeff_.front().cols(); }
  std::size_t vars() const { return coeff_.size(); }
  Field field() const { return coeff_.front().field(); }

  const Matrix& coefficient(std::size_t k) const { return coeff_.at(k); }
  Matrix& coefficient(std::size_t k) { return coeff_.at(k); }
  LinearForm entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, const LinearForm& form);
  bool is_zero() const;

  friend bool operator==(const LinearFormMatrix&, const LinearFormMatrix&) = default;

 private:
  std::vector<Matrix> coeff_;
};

/// A matrix of quadratic forms: coefficient matrices indexed by (k, l) with k ≤ l
/// for the monomial z_k z_l. Only nonzero coefficients are stored.
class QuadraticFormMatrix {
 public:
  QuadraticFormMatrix(std::size_t rows, std::size_t cols, std::size_t vars, Field f = Field::rational());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t vars() const { return vars_; }
  Field field() const { return field_; }

  /// Coefficient of z_k z_l (order of k, l irrelevant); a zero matrix if absent.
  Matrix coefficient(std::size_t k, std::size_t l) const;
  void add_to_coefficient(std::size_t k, std::size_t l, const Matrix& m);
  const std::map<std::pair<std::size_t, std::size_t>, Matrix>& coefficients() const { return coeff_; }
  /// Entry (i, j) as monomial → coefficient, zero coefficients omitted.
  std::map<std::pair<std::size_t, std::size_t>, Scalar> entry(std::size_t i, std::size_t j) const;
  bool is_zero() const { return coeff_.empty(); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t vars_;
  Field field_;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> coeff_;
};

/// c × (nc + r): (B_0 z_n − z_0 | ... | B_{n−1} z_n − z_{n−1} | v_1 z_n | ... | v_r z_n).
LinearFormMatrix alpha0(const AdhmDatum& X);

/// (nc + r) × c·C(n,2): blocks A_0 | ... | A_{n−2} over r zero rows. A_i has
/// n − 1 − i block columns; block column k carries B_{i+1+k} z_n − z_{i+1+k}
/// in block row i and −B_i z_n + z_i in block row i + 1 + k.
LinearFormMatrix alpha_minus1(const AdhmDatum& X);

/// 3c × c: (−B_2 z_3 + z_2, B_1 z_3 − z_1, −B_0 z_3 + z_0) stacked. Requires n = 3.
LinearFormMatrix alpha_minus2_p3(const AdhmDatum& X);

/// The product a·b, expanded by monomial. Throws ShapeError on mismatch.
QuadraticFormMatrix compose(const LinearFormMatrix& a, const LinearFormMatrix& b);

/// Σ_k point[k]·M_k. Throws std::invalid_argument at the zero point.
Matrix evaluate(const LinearFormMatrix& m, std::span<const Scalar> point);

struct SurjectivityCertificate {
  bool surjective = true;
  /// For non-surjective data: a covector w ≠ 0 with w·B_i = z_i·w and
  /// w·v_j = 0, and the point (z_0, ..., z_{n−1}, 1) where alpha0 drops rank.
  std::optional<Vector> covector;
  std::optional<Vector> point;
  bool witness_available() const { return covector.has_value(); }
};

/// Decides whether alpha0(X) has rank c at every point of P^n. The verdict is
/// is_stable(X). When unstable, a witness is searched among common left
/// eigenvectors annihilating every v_j, using rational eigenvalues (or every
/// residue over a prime field of size at most 4096).
/// Throws std::invalid_argument on non-commuting data.
SurjectivityCertificate surjectivity_certificate(const AdhmDatum& X);

struct FiberReport {
  std::size_t rank_alpha0 = 0;
  std::size_t rank_alpha_minus1 = 0;
  std::optional<std::size_t> rank_alpha_minus2;  // n = 3 only
  /// Fiber dimensions of the terms, leftmost first.
  std::vector<std::size_t> term_dimensions;
  /// Alternating sum of term_dimensions, signed so that the middle term counts +1.
  long euler_characteristic = 0;
  /// dim ker alpha0 / im alpha_minus1 at the point.
  std::size_t middle_dimension = 0;
};

/// Ranks of the evaluated monad maps at a point of P^n. For n = 3 the chain
/// includes alpha_minus2 and its term; otherwise only alpha_minus1 and alpha0.
FiberReport fiber_report(const AdhmDatum& X, std::span<const Scalar> point);

}  // namespace adhmquot
