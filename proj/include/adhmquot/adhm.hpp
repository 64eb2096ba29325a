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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "adhmquot/matrix.hpp"

namespace adhmquot {

/// An ADHM datum (B_0, ..., B_{n-1}, v_1, ..., v_r): n endomorphisms of a
/// c-dimensional space V and r vectors in V. Commutation is not part of the
/// type; see is_adhm().
class AdhmDatum {
 public:
  AdhmDatum(std::size_t n, std::size_t c, std::size_t r, Field f = Field::rational());
  AdhmDatum(std::vector<Matrix> B, std::vector<Vector> v, std::size_t c, Field f = Field::rational());

  std::size_t n() const { return B_.size(); }
  std::size_t c() const { return c_; }
  std::size_t r() const { return v_.size(); }
  Field field() const { return field_; }

  const Matrix& B(std::size_t i) const { return B_.at(i); }
  const Vector& v(std::size_t j) const { return v_.at(j); }
  const std::vector<Matrix>& Bs() const { return B_; }
  const std::vector<Vector>& vs() const { return v_; }

  void set_B(std::size_t i, Matrix m);
  void set_v(std::size_t j, Vector vec);

  /// The c×r matrix whose columns are the v_j.
  Matrix framing() const;

  friend bool operator==(const AdhmDatum& a, const AdhmDatum& b);

 private:
  void validate() const;

  std::size_t c_;
  Field field_;
  std::vector<Matrix> B_;
  std::vector<Vector> v_;
};

/// An element of GL(V), stored with its inverse.
class GroupElement {
 public:
  /// Throws ShapeError on non-square or singular input.
  explicit GroupElement(Matrix g);
  static GroupElement identity(std::size_t c, Field f = Field::rational());

  const Matrix& matrix() const { return g_; }
  const Matrix& inverse() const { return inv_; }

 private:
  Matrix g_;
  Matrix inv_;
};

/// [B_i, B_j] for i < j in lexicographic order.
std::vector<Matrix> commutators(const AdhmDatum& X);
bool is_adhm(const AdhmDatum& X);

/// Smallest B-invariant subspace containing every v_j.
Subspace krylov_closure(const AdhmDatum& X);
/// S_k where S_0 = span{v_j} and S_{k+1} = S_k + Σ_i B_i(S_k).
Subspace krylov_iterate(const AdhmDatum& X, std::size_t iterations);
bool is_stable(const AdhmDatum& X);

AdhmDatum act(const GroupElement& g, const AdhmDatum& X);

/// dim {ξ : [ξ, B_i] = 0 for all i, ξ·v_j = 0 for all j}.
std::size_t stabilizer_lie_dimension(const AdhmDatum& X);

/// Some g with act(g, X) = Y. For stable inputs the answer is unique; for
/// unstable ones an invertible element of the solution space is searched by
/// random sampling (seeded, deterministic).
std::optional<GroupElement> equivalence(const AdhmDatum& X, const AdhmDatum& Y);

enum class StabilityRequest { any, stable, unstable };

struct RandomOptions {
  StabilityRequest stability = StabilityRequest::stable;
  bool nilpotent = false;
  long entry_bound = 2;
  Field field = Field::rational();
  std::size_t max_retries = 64;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A commuting datum: every B_i is a random polynomial of degree < c in one
/// upper-triangular matrix T (strictly upper in nilpotent mode), then the whole
/// datum is conjugated by a random unimodular matrix. Requested flags are
/// verified before returning; throws SamplingError after max_retries misses.
AdhmDatum random_datum(std::size_t n, std::size_t c, std::size_t r, std::uint64_t seed,
                       const RandomOptions& options = {});

}  // namespace adhmquot
