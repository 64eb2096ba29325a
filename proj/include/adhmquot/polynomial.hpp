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
#include <string>
#include <vector>

#include <gmpxx.h>

#include "adhmquot/matrix.hpp"

namespace adhmquot {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);

  static Polynomial monomial(const mpq_class& coeff, std::size_t degree);
  /// x - root
  static Polynomial linear(const mpq_class& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpq_class(0); }
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class operator()(const mpq_class& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  struct DivMod;
  DivMod divmod(const Polynomial& divisor) const;

  /// e.g. "z^2 + 1", "z - 1/2".
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// det(z·I - m), computed by Hessenberg reduction. Rational matrices only.
Polynomial characteristic_polynomial(const Matrix& m);

/// Distinct rational roots in increasing order.
std::vector<mpq_class> rational_roots(const Polynomial& p);

struct PolynomialFactor {
  Polynomial factor;  // monic
  std::size_t multiplicity = 1;
  /// False when the bounded irreducibility search gave up on this factor.
  bool irreducible = true;
};

/// Factorization of a nonzero polynomial into monic factors over Q, ordered by
/// degree then coefficients. Linear factors come from exact rational-root
/// search; higher-degree factors are split by Kronecker's method with a
/// bounded search budget.
std::vector<PolynomialFactor> factor_rational(const Polynomial& p);

}  // namespace adhmquot
