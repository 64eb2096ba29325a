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

#include "adhmquot/matrix.hpp"

#include <gtest/gtest.h>

#include "adhmquot/random.hpp"

using namespace adhmquot;

namespace {

Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Matrix random_rational(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(rng.uniform(-3, 3), rng.uniform(1, 3));
  }
  return m;
}

}  // namespace

TEST(RankTest, Examples) {
  EXPECT_EQ(rank(Matrix::identity(3)), 3U);
  EXPECT_EQ(rank(Matrix(2, 3)), 0U);
  EXPECT_EQ(rank(Matrix::from_ints({{1, 2}, {2, 4}})), 1U);
  EXPECT_EQ(rank(Matrix(0, 4)), 0U);
  EXPECT_EQ(rank(Matrix(4, 0)), 0U);
}

TEST(KernelTest, Examples) {
  EXPECT_EQ(kernel_basis(Matrix::identity(3)).dim(), 0U);
  EXPECT_EQ(kernel_basis(Matrix(2, 2)), Subspace::full(2));
  Subspace k = kernel_basis(Matrix::from_ints({{1, 1}}));
  ASSERT_EQ(k.dim(), 1U);
  EXPECT_TRUE(k.contains(ints({1, -1})));
  EXPECT_FALSE(k.contains(ints({1, 1})));
}

TEST(SolveTest, Examples) {
  auto x = solve(Matrix::identity(3), ints({4, -1, 7}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, ints({4, -1, 7}));
  auto y = solve(Matrix::from_ints({{1, 1}}), ints({2}));
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, ints({2, 0}));
  EXPECT_FALSE(solve(Matrix::from_ints({{1}, {1}}), ints({1, 2})));
  EXPECT_THROW(solve(Matrix::identity(2), ints({1})), ShapeError);
}

TEST(SolveTest, MixedModesRejected) {
  Matrix a = Matrix::identity(2);
  Matrix b = Matrix::identity(2, Field::prime(3));
  EXPECT_THROW(a * b, ScalarModeError);
  EXPECT_THROW(solve(a, b.column(0)), ScalarModeError);
}

TEST(MatrixProperties, RankOfTransposeAndRankNullity) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = rng.uniform(0, 5);
    std::size_t cols = rng.uniform(0, 5);
    Matrix m = random_rational(rng, rows, cols);
    if (trial % 3 == 0 && rows > 1) {
      // force a dependency
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * Scalar(2);
    }
    EXPECT_EQ(rank(m), rank(m.transpose()));
    Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim() + rank(m), cols);
    for (const auto& x : k.vectors()) EXPECT_TRUE(is_zero(m * x));
  }
}

TEST(MatrixProperties, SolveReturnsExactSolutions) {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = rng.uniform(1, 5);
    std::size_t cols = rng.uniform(1, 5);
    Matrix a = random_rational(rng, rows, cols);
    Vector b;
    if (trial % 2 == 0) {
      b = a * random_rational(rng, cols, 1).column(0);
    } else {
      b = random_rational(rng, rows, 1).column(0);
    }
    auto x = solve(a, b);
    if (trial % 2 == 0) ASSERT_TRUE(x);
    if (x) EXPECT_EQ(a * *x, b);
    if (!x) {
      Matrix aug = hstack(a, Matrix::from_columns(rows, std::vector<Vector>{b}, Field::rational()));
      EXPECT_LT(rank(a), rank(aug));
    }
  }
}

TEST(MatrixProperties, PrimeRanksBoundedByRationalRank) {
  Rng rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t rows = rng.uniform(1, 6);
    std::size_t cols = rng.uniform(1, 6);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(rng.uniform(-4, 4));
    }
    const std::size_t q = rank(m);
    for (std::uint64_t p : {101ULL, 32749ULL}) {
      const std::size_t rp = rank(m.reduce(Field::prime(p)));
      EXPECT_LE(rp, q);
      // small entries and small sizes: no prime here divides the relevant minors
      EXPECT_EQ(rp, q);
    }
  }
}

TEST(MatrixTest, InverseAndDeterminant) {
  Matrix m = Matrix::from_ints({{2, 1}, {7, 4}});
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Matrix::identity(2));
  EXPECT_EQ(determinant(m), Scalar(1));
  EXPECT_FALSE(inverse(Matrix::from_ints({{1, 2}, {2, 4}})));
  EXPECT_EQ(determinant(Matrix::from_ints({{0, 1}, {1, 0}})), Scalar(-1));
  EXPECT_TRUE(inverse(Matrix(0, 0)));
}

TEST(SubspaceTest, SumImageInvariance) {
  Matrix shift = Matrix::from_ints({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  Subspace line = Subspace::span(3, std::vector<Vector>{ints({1, 0, 0})}, Field::rational());
  EXPECT_TRUE(line.is_invariant(shift));
  Subspace plane = Subspace::span(3, std::vector<Vector>{ints({0, 1, 0})}, Field::rational()).sum(line);
  EXPECT_EQ(plane.dim(), 2U);
  EXPECT_TRUE(plane.is_invariant(shift));
  EXPECT_EQ(plane.image(shift), line);
  EXPECT_TRUE(plane.contains(line));
  EXPECT_EQ(plane.coordinates(ints({3, 5, 0})), ints({3, 5}));
  EXPECT_THROW(plane.coordinates(ints({0, 0, 1})), ShapeError);
}
