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

// Quotients of the free module F[z_0..z_{n-1}]^r of finite length and the
// ADHM data they correspond to: a datum X gives the surjection
// Φ_X(p) = Σ_j p_j(B) v_j, whose kernel is the submodule; a submodule gives
// back X as the multiplication matrices on the quotient.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "adhmquot/adhm.hpp"

namespace adhmquot {

using Monomial = std::vector<unsigned>;

std::size_t total_degree(const Monomial& m);

/// All monomials in n variables of degree ≤ d: by increasing degree, and
/// lexicographically decreasing with z_0 > ... > z_{n-1} within a degree.
std::vector<Monomial> monomials_up_to_degree(std::size_t n, std::size_t d);

/// A monomial times a basis vector e_j of the free module (j is 0-based).
struct ModuleTerm {
  Monomial alpha;
  std::size_t slot = 0;
  friend auto operator<=>(const ModuleTerm&, const ModuleTerm&) = default;
};

/// Sparse element of F[z_0..z_{n-1}]^r. Zero coefficients are never stored.
class PolyVector {
 public:
  PolyVector(std::size_t n, std::size_t r, Field f = Field::rational());

  static PolyVector unit(std::size_t n, std::size_t r, std::size_t slot, Field f = Field::rational());

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  Field field() const { return field_; }
  const std::map<ModuleTerm, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree of a term; 0 for the zero vector.
  std::size_t degree() const;

  /// Adds coeff·z^alpha·e_slot.
  void add_term(const Monomial& alpha, std::size_t slot, const Scalar& coeff);
  PolyVector times_variable(std::size_t i) const;
  PolyVector times_monomial(const Monomial& m) const;

  PolyVector& operator+=(const PolyVector& rhs);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator*(const Scalar& s, const PolyVector& p);
  friend bool operator==(const PolyVector& a, const PolyVector& b);

 private:
  void check_term(const Monomial& alpha, std::size_t slot) const;

  std::size_t n_;
  std::size_t r_;
  Field field_;
  std::map<ModuleTerm, Scalar> terms_;
};

/// Σ_j p_j(B_0, ..., B_{n-1}) v_j with monomials read as B_0^{α_0}···B_{n-1}^{α_{n-1}}.
/// Throws std::invalid_argument on non-commuting data.
Vector phi_apply(const AdhmDatum& X, const PolyVector& p);

/// Basis of {p : deg p ≤ d, Φ_X(p) = 0}. Columns of the evaluation matrix are
/// slot-major, monomials within a slot in monomials_up_to_degree order.
std::vector<PolyVector> kernel_basis_up_to_degree(const AdhmDatum& X, std::size_t d);

/// dim Φ_X(F_{≤d}) for d = 0, 1, ... until the value repeats (the repeat is
/// not appended). The last entry is dim krylov_closure(X).
std::vector<std::size_t> hilbert_profile(const AdhmDatum& X);

class QuotientNotFinite : public std::runtime_error {
 public:
  QuotientNotFinite(const std::string& what, std::vector<std::size_t> profile)
      : std::runtime_error(what), profile_(std::move(profile)) {}
  const std::vector<std::size_t>& profile() const { return profile_; }

 private:
  std::vector<std::size_t> profile_;
};

struct QuotientModule {
  AdhmDatum datum;
  /// Standard terms whose classes form the basis of the quotient, in the
  /// order used for the coordinates of datum.
  std::vector<ModuleTerm> basis;
  /// Truncated quotient dimensions dim F_{≤D} / M_{≤D} for D = 0..degree.
  std::vector<std::size_t> profile;
  std::size_t degree = 0;
};

/// Multiplication matrices of z_0..z_{n-1} on F^r / <gens>, found by
/// degree-truncated linear algebra. A degree D is accepted once the truncated
/// quotient dimension agrees at D-1 and D and the extracted datum commutes,
/// is stable and annihilates every generator. Without an explicit cap the
/// search runs to max(max generator degree, first plateau dimension) + 2.
QuotientModule module_from_generators(std::size_t n, std::size_t r, const std::vector<PolyVector>& gens,
                                      std::optional<std::size_t> degree_cap = std::nullopt);

}  // namespace adhmquot
