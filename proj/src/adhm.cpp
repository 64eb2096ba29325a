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

#include "adhmquot/adhm.hpp"

#include <string>

#include "adhmquot/random.hpp"

namespace adhmquot {

AdhmDatum::AdhmDatum(std::size_t n, std::size_t c, std::size_t r, Field f)
    : c_(c), field_(f), B_(n, Matrix(c, c, f)), v_(r, zero_vector(c, f)) {
  validate();
}

AdhmDatum::AdhmDatum(std::vector<Matrix> B, std::vector<Vector> v, std::size_t c, Field f)
    : c_(c), field_(f), B_(std::move(B)), v_(std::move(v)) {
  validate();
}

void AdhmDatum::validate() const {
  if (B_.empty()) throw ShapeError("an ADHM datum needs n >= 1 matrices");
  if (v_.empty()) throw ShapeError("an ADHM datum needs r >= 1 vectors");
  for (const auto& b : B_) {
    if (b.rows() != c_ || b.cols() != c_) {
      throw ShapeError("B matrices must be " + std::to_string(c_) + "x" + std::to_string(c_));
    }
    if (b.field() != field_) throw ScalarModeError("B matrix over " + b.field().name() + " in a datum over " + field_.name());
  }
  for (const auto& vec : v_) {
    if (vec.size() != c_) throw ShapeError("v vectors must have length " + std::to_string(c_));
    for (const auto& s : vec) {
      if (s.field() != field_) throw ScalarModeError("v entry over " + s.field().name() + " in a datum over " + field_.name());
    }
  }
}

void AdhmDatum::set_B(std::size_t i, Matrix m) {
  B_.at(i) = std::move(m);
  validate();
}

void AdhmDatum::set_v(std::size_t j, Vector vec) {
  v_.at(j) = std::move(vec);
  validate();
}

Matrix AdhmDatum::framing() const { return Matrix::from_columns(c_, v_, field_); }

bool operator==(const AdhmDatum& a, const AdhmDatum& b) {
  return a.c_ == b.c_ && a.field_ == b.field_ && a.B_ == b.B_ && a.v_ == b.v_;
}

GroupElement::GroupElement(Matrix g) : g_(std::move(g)) {
  auto inv = adhmquot::inverse(g_);
  if (!inv) throw ShapeError("group element must be invertible");
  inv_ = std::move(*inv);
}

GroupElement GroupElement::identity(std::size_t c, Field f) { return GroupElement(Matrix::identity(c, f)); }

std::vector<Matrix> commutators(const AdhmDatum& X) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < X.n(); ++i) {
    for (std::size_t j = i + 1; j < X.n(); ++j) out.push_back(X.B(i) * X.B(j) - X.B(j) * X.B(i));
  }
  return out;
}

bool is_adhm(const AdhmDatum& X) {
  for (const auto& m : commutators(X)) {
    if (!m.is_zero()) return false;
  }
  return true;
}

Subspace krylov_iterate(const AdhmDatum& X, std::size_t iterations) {
  Subspace s = Subspace::span(X.c(), X.vs(), X.field());
  for (std::size_t k = 0; k < iterations; ++k) {
    Subspace next = s;
    for (const auto& b : X.Bs()) next = next.sum(s.image(b));
    if (next.dim() == s.dim()) break;
    s = std::move(next);
  }
  return s;
}

Subspace krylov_closure(const AdhmDatum& X) {
  // The chain grows strictly until it stabilizes, so c steps suffice.
  return krylov_iterate(X, X.c());
}

bool is_stable(const AdhmDatum& X) { return krylov_closure(X).dim() == X.c(); }

AdhmDatum act(const GroupElement& g, const AdhmDatum& X) {
  if (g.matrix().rows() != X.c()) throw ShapeError("group element size does not match the datum");
  std::vector<Matrix> B;
  for (const auto& b : X.Bs()) B.push_back(g.matrix() * b * g.inverse());
  std::vector<Vector> v;
  for (const auto& vec : X.vs()) v.push_back(g.matrix() * vec);
  return AdhmDatum(std::move(B), std::move(v), X.c(), X.field());
}

namespace {

/// Linear system in the c² entries of an unknown g (index a*c + b):
/// g·left_i − right_i·g = 0 for each i, and g·v_j = w_j.
struct IntertwinerSystem {
  Matrix lhs;
  Vector rhs;
};

IntertwinerSystem intertwiner_system(const AdhmDatum& X, const AdhmDatum& Y) {
  const std::size_t c = X.c();
  const Field f = X.field();
  const std::size_t eqs = X.n() * c * c + X.r() * c;
  IntertwinerSystem sys{Matrix(eqs, c * c, f), zero_vector(eqs, f)};
  std::size_t row = 0;
  for (std::size_t i = 0; i < X.n(); ++i) {
    const Matrix& left = X.B(i);
    const Matrix& right = Y.B(i);
    for (std::size_t p = 0; p < c; ++p) {
      for (std::size_t q = 0; q < c; ++q, ++row) {
        // (g·left)_{pq} = Σ_b g_{pb} left_{bq};  (right·g)_{pq} = Σ_a right_{pa} g_{aq}
        for (std::size_t b = 0; b < c; ++b) sys.lhs(row, p * c + b) += left(b, q);
        for (std::size_t a = 0; a < c; ++a) sys.lhs(row, a * c + q) -= right(p, a);
      }
    }
  }
  for (std::size_t j = 0; j < X.r(); ++j) {
    for (std::size_t p = 0; p < c; ++p, ++row) {
      for (std::size_t b = 0; b < c; ++b) sys.lhs(row, p * c + b) = X.v(j)[b];
      sys.rhs[row] = Y.v(j)[p];
    }
  }
  return sys;
}

Matrix unflatten(std::span<const Scalar> x, std::size_t c, Field f) {
  Matrix g(c, c, f);
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b) g(a, b) = x[a * c + b];
  }
  return g;
}

}  // namespace

std::size_t stabilizer_lie_dimension(const AdhmDatum& X) {
  AdhmDatum zeroed = X;
  for (std::size_t j = 0; j < X.r(); ++j) zeroed.set_v(j, zero_vector(X.c(), X.field()));
  // ξ·B_i − B_i·ξ = 0 and ξ·v_j = 0: the homogeneous intertwiner system of X with itself.
  return kernel_basis(intertwiner_system(X, zeroed).lhs).dim();
}

std::optional<GroupElement> equivalence(const AdhmDatum& X, const AdhmDatum& Y) {
  if (X.n() != Y.n() || X.c() != Y.c() || X.r() != Y.r() || X.field() != Y.field()) {
    throw ShapeError("equivalence requires data of the same (n, c, r) over one field");
  }
  const std::size_t c = X.c();
  auto sys = intertwiner_system(X, Y);
  auto particular = solve(sys.lhs, sys.rhs);
  if (!particular) return std::nullopt;
  Matrix g = unflatten(*particular, c, X.field());
  if (inverse(g)) return GroupElement(std::move(g));
  Subspace homogeneous = kernel_basis(sys.lhs);
  if (homogeneous.dim() == 0) return std::nullopt;
  // Invertibility is a Zariski-open condition on the affine solution space;
  // random points find an invertible element if one exists, with high
  // probability over large fields.
  Rng rng(0x5eedULL);
  const auto directions = homogeneous.vectors();
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vector x = *particular;
    for (const auto& d : directions) x = add(x, scale(rng.scalar(X.field(), 8), d));
    Matrix candidate = unflatten(x, c, X.field());
    if (inverse(candidate)) return GroupElement(std::move(candidate));
  }
  return std::nullopt;
}

namespace {

bool nilpotent_tuple(const AdhmDatum& X) {
  for (const auto& b : X.Bs()) {
    if (!power(b, X.c()).is_zero()) return false;
  }
  return true;
}

AdhmDatum draw_commuting(std::size_t n, std::size_t c, std::size_t r, Rng& rng, const RandomOptions& opt) {
  const Field f = opt.field;
  const long bound = opt.entry_bound;
  Matrix T(c, c, f);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i; j < c; ++j) {
      if (i == j) {
        if (!opt.nilpotent) T(i, j) = rng.scalar(f, bound);
      } else if (j == i + 1 && opt.nilpotent) {
        // occasionally drop a superdiagonal entry for non-regular Jordan types
        T(i, j) = rng.coin(4) ? Scalar::zero(f) : rng.nonzero_scalar(f, bound);
      } else {
        T(i, j) = rng.scalar(f, bound);
      }
    }
  }
  std::vector<Matrix> powers{Matrix::identity(c, f)};
  for (std::size_t k = 1; k < c; ++k) powers.push_back(powers.back() * T);
  std::vector<Matrix> B;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix b(c, c, f);
    for (std::size_t k = opt.nilpotent ? 1 : 0; k < c; ++k) b += rng.scalar(f, bound) * powers[k];
    B.push_back(std::move(b));
  }
  // T is upper triangular, so span{e_1..e_k} is invariant under every B_i.
  std::size_t support = c;
  if (opt.stability == StabilityRequest::unstable && c > 0) support = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(c) - 1));
  std::vector<Vector> v;
  for (std::size_t j = 0; j < r; ++j) {
    Vector vec = zero_vector(c, f);
    for (std::size_t a = 0; a < support; ++a) vec[a] = rng.scalar(f, bound);
    v.push_back(std::move(vec));
  }
  AdhmDatum X(std::move(B), std::move(v), c, f);
  return act(GroupElement(rng.unimodular(c, f)), X);
}

}  // namespace

AdhmDatum random_datum(std::size_t n, std::size_t c, std::size_t r, std::uint64_t seed,
                       const RandomOptions& options) {
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt <= options.max_retries; ++attempt) {
    AdhmDatum X = draw_commuting(n, c, r, rng, options);
    if (options.nilpotent && !nilpotent_tuple(X)) continue;
    if (options.stability != StabilityRequest::any) {
      const bool stable = is_stable(X);
      if (stable != (options.stability == StabilityRequest::stable)) continue;
    }
    return X;
  }
  throw SamplingError("random_datum: could not satisfy the requested flags for (n, c, r) = (" +
                      std::to_string(n) + ", " + std::to_string(c) + ", " + std::to_string(r) + ") within " +
                      std::to_string(options.max_retries) + " retries");
}

}  // namespace adhmquot
