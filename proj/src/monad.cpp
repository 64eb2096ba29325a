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

#include "adhmquot/monad.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "adhmquot/polynomial.hpp"

namespace adhmquot {

LinearForm::LinearForm(std::size_t vars, Field f) : coeffs_(vars, Scalar::zero(f)) {}

LinearForm::LinearForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

bool LinearForm::is_zero() const { return adhmquot::is_zero(coeffs_); }

Scalar LinearForm::operator()(std::span<const Scalar> point) const {
  if (point.size() != coeffs_.size()) throw ShapeError("point has the wrong number of coordinates");
  return dot(coeffs_, point);
}

LinearFormMatrix::LinearFormMatrix(std::size_t rows, std::size_t cols, std::size_t vars, Field f)
    : coeff_(vars, Matrix(rows, cols, f)) {
  if (vars == 0) throw ShapeError("a matrix of linear forms needs at least one variable");
}

LinearForm LinearFormMatrix::entry(std::size_t i, std::size_t j) const {
  std::vector<Scalar> c;
  for (const auto& m : coeff_) c.push_back(m(i, j));
  return LinearForm(std::move(c));
}

void LinearFormMatrix::set_entry(std::size_t i, std::size_t j, const LinearForm& form) {
  if (form.vars() != vars()) throw ShapeError("linear form has the wrong number of variables");
  for (std::size_t k = 0; k < vars(); ++k) coeff_[k](i, j) = form.coeff(k);
}

bool LinearFormMatrix::is_zero() const {
  for (const auto& m : coeff_) {
    if (!m.is_zero()) return false;
  }
  return true;
}

QuadraticFormMatrix::QuadraticFormMatrix(std::size_t rows, std::size_t cols, std::size_t vars, Field f)
    : rows_(rows), cols_(cols), vars_(vars), field_(f) {}

Matrix QuadraticFormMatrix::coefficient(std::size_t k, std::size_t l) const {
  if (k > l) std::swap(k, l);
  auto it = coeff_.find({k, l});
  return it == coeff_.end() ? Matrix(rows_, cols_, field_) : it->second;
}

void QuadraticFormMatrix::add_to_coefficient(std::size_t k, std::size_t l, const Matrix& m) {
  if (k > l) std::swap(k, l);
  if (l >= vars_) throw ShapeError("monomial index out of range");
  if (m.rows() != rows_ || m.cols() != cols_) throw ShapeError("coefficient matrix has the wrong shape");
  auto [it, inserted] = coeff_.try_emplace({k, l}, m);
  if (!inserted) it->second += m;
  if (it->second.is_zero()) coeff_.erase(it);
}

std::map<std::pair<std::size_t, std::size_t>, Scalar> QuadraticFormMatrix::entry(std::size_t i, std::size_t j) const {
  std::map<std::pair<std::size_t, std::size_t>, Scalar> out;
  for (const auto& [kl, m] : coeff_) {
    if (!m(i, j).is_zero()) out.emplace(kl, m(i, j));
  }
  return out;
}

namespace {

/// Adds the block s·(B z_n − z_i·Id) at block position (row, col), c × c.
void put_block(LinearFormMatrix& m, std::size_t row, std::size_t col, const Matrix& B, std::size_t i,
               const Scalar& s) {
  const std::size_t c = B.rows();
  const std::size_t zn = m.vars() - 1;
  m.coefficient(zn).set_block(row, col, s * B);
  Matrix& zi = m.coefficient(i);
  for (std::size_t a = 0; a < c; ++a) zi(row + a, col + a) = -s;
}

}  // namespace

LinearFormMatrix alpha0(const AdhmDatum& X) {
  const std::size_t n = X.n(), c = X.c(), r = X.r();
  LinearFormMatrix m(c, n * c + r, n + 1, X.field());
  const Scalar one = Scalar::one(X.field());
  for (std::size_t i = 0; i < n; ++i) put_block(m, 0, i * c, X.B(i), i, one);
  for (std::size_t j = 0; j < r; ++j) m.coefficient(n).set_column(n * c + j, X.v(j));
  return m;
}

LinearFormMatrix alpha_minus1(const AdhmDatum& X) {
  const std::size_t n = X.n(), c = X.c(), r = X.r();
  LinearFormMatrix m(n * c + r, c * (n * (n - 1) / 2), n + 1, X.field());
  const Scalar one = Scalar::one(X.field());
  std::size_t col = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = 0; i + 1 + k < n; ++k, col += c) {
      put_block(m, i * c, col, X.B(i + 1 + k), i + 1 + k, one);
      put_block(m, (i + 1 + k) * c, col, X.B(i), i, -one);
    }
  }
  return m;
}

LinearFormMatrix alpha_minus2_p3(const AdhmDatum& X) {
  if (X.n() != 3) throw std::invalid_argument("alpha_minus2 is only defined for n = 3");
  const std::size_t c = X.c();
  LinearFormMatrix m(3 * c, c, 4, X.field());
  const Scalar one = Scalar::one(X.field());
  put_block(m, 0, 0, X.B(2), 2, -one);
  put_block(m, c, 0, X.B(1), 1, one);
  put_block(m, 2 * c, 0, X.B(0), 0, -one);
  return m;
}

QuadraticFormMatrix compose(const LinearFormMatrix& a, const LinearFormMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("cannot compose " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " with " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.vars() != b.vars()) throw ShapeError("linear form matrices over different variable counts");
  QuadraticFormMatrix out(a.rows(), b.cols(), a.vars(), a.field());
  for (std::size_t k = 0; k < a.vars(); ++k) {
    if (a.coefficient(k).is_zero()) continue;
    for (std::size_t l = 0; l < b.vars(); ++l) {
      if (b.coefficient(l).is_zero()) continue;
      out.add_to_coefficient(k, l, a.coefficient(k) * b.coefficient(l));
    }
  }
  return out;
}

Matrix evaluate(const LinearFormMatrix& m, std::span<const Scalar> point) {
  if (point.size() != m.vars()) throw ShapeError("point has the wrong number of coordinates");
  if (is_zero(point)) throw std::invalid_argument("the zero vector is not a point of projective space");
  Matrix out(m.rows(), m.cols(), m.field());
  for (std::size_t k = 0; k < m.vars(); ++k) {
    if (!point[k].is_zero()) out += point[k] * m.coefficient(k);
  }
  return out;
}

namespace {

/// Candidate eigenvalues of m (square, in the coordinates of an invariant
/// subspace): rational roots of the characteristic polynomial, or every
/// residue of a small prime field.
std::optional<std::vector<Scalar>> candidate_eigenvalues(const Matrix& m) {
  const Field f = m.field();
  std::vector<Scalar> out;
  if (f.is_rational()) {
    for (const auto& q : rational_roots(characteristic_polynomial(m))) out.emplace_back(q);
    return out;
  }
  if (f.modulus() > 4096) return std::nullopt;
  for (std::uint64_t a = 0; a < f.modulus(); ++a) out.push_back(Scalar::from_int(f, static_cast<long>(a)));
  return out;
}

/// A common eigenvector of ops[i..] inside the nonzero subspace s, which is
/// invariant under all of them; eigenvalues recorded in `values`.
std::optional<Vector> common_eigenvector(const Subspace& s, const std::vector<Matrix>& ops, std::size_t i,
                                         std::vector<Scalar>& values, bool& incomplete) {
  if (i == ops.size()) return s.vectors().front();
  auto candidates = candidate_eigenvalues(restriction(s, ops[i]));
  if (!candidates) {
    incomplete = true;
    return std::nullopt;
  }
  for (const auto& lambda : *candidates) {
    Subspace e = kernel_within(s, ops[i] - lambda * Matrix::identity(s.ambient_dim(), s.field()));
    if (e.dim() == 0) continue;
    values.push_back(lambda);
    if (auto w = common_eigenvector(e, ops, i + 1, values, incomplete)) return w;
    values.pop_back();
  }
  return std::nullopt;
}

}  // namespace

SurjectivityCertificate surjectivity_certificate(const AdhmDatum& X) {
  if (!is_adhm(X)) throw std::invalid_argument("surjectivity certificate requires commuting data");
  SurjectivityCertificate cert;
  const Subspace K = krylov_closure(X);
  if (K.dim() == X.c()) return cert;
  cert.surjective = false;
  // Covectors annihilating K form a subspace invariant under w ↦ w·B_i; as
  // columns, the kernel of K's basis matrix, invariant under every B_iᵀ.
  Subspace annihilator = K.dim() == 0 ? Subspace::full(X.c(), X.field()) : kernel_basis(K.basis());
  std::vector<Matrix> transposed;
  for (const auto& b : X.Bs()) transposed.push_back(b.transpose());
  std::vector<Scalar> values;
  bool incomplete = false;
  if (auto w = common_eigenvector(annihilator, transposed, 0, values, incomplete)) {
    cert.covector = std::move(*w);
    values.push_back(Scalar::one(X.field()));
    cert.point = std::move(values);
  }
  return cert;
}

FiberReport fiber_report(const AdhmDatum& X, std::span<const Scalar> point) {
  const std::size_t n = X.n(), c = X.c(), r = X.r();
  FiberReport rep;
  rep.rank_alpha0 = rank(evaluate(alpha0(X), point));
  rep.rank_alpha_minus1 = rank(evaluate(alpha_minus1(X), point));
  if (n == 3) {
    rep.rank_alpha_minus2 = rank(evaluate(alpha_minus2_p3(X), point));
    rep.term_dimensions = {c, 3 * c, 3 * c + r, c};
  } else {
    rep.term_dimensions = {c * (n * (n - 1) / 2), n * c + r, c};
  }
  // The middle term (nc + r) sits second from the right and counts positively.
  const std::size_t terms = rep.term_dimensions.size();
  for (std::size_t k = 0; k < terms; ++k) {
    const long d = static_cast<long>(rep.term_dimensions[k]);
    rep.euler_characteristic += (terms - k) % 2 == 0 ? d : -d;
  }
  rep.middle_dimension = n * c + r - rep.rank_alpha_minus1 - rep.rank_alpha0;
  return rep;
}

}  // namespace adhmquot
