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

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace adhmquot {

/// Raised when two scalars from different fields meet in one operation.
class ScalarModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised on division by zero or parsing of malformed scalar literals.
class ScalarError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The coefficient field: either the rationals or a prime field F_p.
///
/// A modulus of zero encodes the rationals. Prime moduli are checked for
/// primality on construction and must be below 2^31 so that residue products
/// fit into 64 bits.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rational() { return Field{}; }
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr bool is_prime() const { return modulus_ != 0; }
  constexpr std::uint64_t modulus() const { return modulus_; }

  /// "Q" or "GF(p)".
  std::string name() const;
  static Field parse(std::string_view name);

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);  // NOLINT: implicit rational literal
  explicit Scalar(mpq_class value);
  Scalar(long num, long den);

  static Scalar zero(Field f) { return from_int(f, 0); }
  static Scalar one(Field f) { return from_int(f, 1); }
  static Scalar from_int(Field f, long value);
  static Scalar from_mpz(Field f, const mpz_class& value);
  /// Parses "p/q", "p" (rationals) or a decimal residue (prime fields).
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  int sign() const;  // rationals only; residues report 0 or 1

  /// Rational value; throws for prime-field scalars.
  const mpq_class& rational() const;
  std::uint64_t residue() const;

  /// Maps a rational into F_p; throws when p divides the denominator.
  Scalar reduce(Field target) const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q" or "p" for rationals, decimal residue for prime fields.
  std::string to_string() const;

 private:
  void check_same(const Scalar& rhs) const;

  Field field_;
  mpq_class q_;
  std::uint64_t res_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace adhmquot
