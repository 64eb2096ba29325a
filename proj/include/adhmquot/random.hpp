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
#include <random>

#include "adhmquot/matrix.hpp"

namespace adhmquot {

/// Seeded generator with distribution code of our own, so that a seed yields
/// the same stream on every standard library (mt19937_64 itself is fully
/// specified, the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  bool coin(unsigned one_in = 2) { return engine_() % one_in == 0; }
  std::uint64_t next() { return engine_(); }

  Scalar scalar(Field f, long bound) { return Scalar::from_int(f, uniform(-bound, bound)); }
  Scalar nonzero_scalar(Field f, long bound) {
    for (;;) {
      Scalar s = scalar(f, bound);
      if (!s.is_zero()) return s;
    }
  }
  Vector vector(std::size_t n, Field f, long bound) {
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f, bound));
    return v;
  }
  Matrix matrix(std::size_t rows, std::size_t cols, Field f, long bound) {
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(f, bound);
    }
    return m;
  }
  /// Product of random unit lower and unit upper triangular matrices:
  /// determinant one, integer entries.
  Matrix unimodular(std::size_t n, Field f, long bound = 1) {
    Matrix lower = Matrix::identity(n, f);
    Matrix upper = Matrix::identity(n, f);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        lower(i, j) = scalar(f, bound);
        upper(j, i) = scalar(f, bound);
      }
    }
    return lower * upper;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace adhmquot
