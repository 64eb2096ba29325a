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

#include "adhmquot/scalar.hpp"

#include <charconv>
#include <ostream>

namespace adhmquot {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

std::uint64_t mod_reduce(const mpz_class& z, std::uint64_t p) {
  // mpz_fdiv_ui returns the non-negative remainder.
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31U) || !is_prime_u64(p)) {
    throw ScalarError("field modulus must be a prime below 2^31, got " +
                      std::to_string(p));
  }
  return Field{p};
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

Field Field::parse(std::string_view name) {
  if (name == "Q" || name.empty()) return rational();
  if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')') {
    auto digits = name.substr(3, name.size() - 4);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw ScalarError("unknown field \"" + std::string(name) + "\" (expected Q or GF(p))");
}

Scalar::Scalar(long value) : q_(value) {}

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ScalarError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::from_int(Field f, long value) {
  if (f.is_rational()) return Scalar(value);
  return from_mpz(f, mpz_class(value));
}

Scalar Scalar::from_mpz(Field f, const mpz_class& value) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = value;
  } else {
    s.res_ = mod_reduce(value, f.modulus());
  }
  return s;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) ok = parse_integer(text.substr(slash + 1), den);
  if (!ok) throw ScalarError("malformed scalar \"" + std::string(text) + "\"");
  if (den == 0) throw ScalarError("zero denominator in \"" + std::string(text) + "\"");
  if (f.is_rational()) return Scalar(mpq_class(num, den));
  return from_mpz(f, num) / from_mpz(f, den);
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : res_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : res_ == 1; }

int Scalar::sign() const { return field_.is_rational() ? sgn(q_) : (res_ == 0 ? 0 : 1); }

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw ScalarModeError("rational value requested from " + field_.name());
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw ScalarModeError("residue requested from a rational scalar");
  return res_;
}

Scalar Scalar::reduce(Field target) const {
  if (target == field_) return *this;
  if (!field_.is_rational()) {
    throw ScalarModeError("cannot reduce " + field_.name() + " into " + target.name());
  }
  Scalar den = from_mpz(target, q_.get_den());
  if (den.is_zero()) {
    throw ScalarError("denominator of " + to_string() + " vanishes in " + target.name());
  }
  return from_mpz(target, q_.get_num()) / den;
}

void Scalar::check_same(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw ScalarModeError("mixed scalar modes: " + field_.name() + " and " + rhs.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("division by zero");
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    s.res_ = mod_pow(res_, field_.modulus() - 2, field_.modulus());
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else if (res_ != 0) {
    s.res_ = field_.modulus() - res_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    res_ = (res_ + rhs.res_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same(rhs);
  if (field_.is_rational()) {
    q_ -= rhs.q_;
  } else {
    res_ = (res_ + field_.modulus() - rhs.res_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    res_ = res_ * rhs.res_ % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same(rhs);
  if (rhs.is_zero()) throw ScalarError("division by zero");
  if (field_.is_rational()) {
    q_ /= rhs.q_;
  } else {
    *this *= rhs.inverse();
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.res_ == b.res_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(res_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace adhmquot
