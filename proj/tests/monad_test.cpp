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

#include <gtest/gtest.h>

#include "adhmquot/random.hpp"

using namespace adhmquot;

namespace {

Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LinearForm form(std::initializer_list<long> xs) { return LinearForm(ints(xs)); }

/// Evaluates a quadratic form matrix entry by entry, independently of compose.
Matrix evaluate_quadratic(const QuadraticFormMatrix& q, const Vector& p) {
  Matrix out(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) {
      for (const auto& [kl, s] : q.entry(i, j)) out(i, j) += s * p[kl.first] * p[kl.second];
    }
  }
  return out;
}

Vector random_point(Rng& rng, std::size_t vars) {
  for (;;) {
    Vector p = rng.vector(vars, Field::rational(), 9);
    if (!is_zero(p)) return p;
  }
}

/// A random unstable datum with an explicit left eigenvector: B_i upper
/// triangular polynomials in one T, v's supported on e_1..e_{c−1}. Then e_cᵀ
/// is a common left eigenvector with eigenvalues B_i(c, c) killing every v_j.
AdhmDatum triangular_unstable(std::size_t n, std::size_t c, std::size_t r, Rng& rng) {
  Matrix T(c, c);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i; j < c; ++j) T(i, j) = rng.scalar(Field::rational(), 3);
  }
  std::vector<Matrix> B;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix b = rng.scalar(Field::rational(), 2) * Matrix::identity(c) + rng.scalar(Field::rational(), 2) * T +
               rng.scalar(Field::rational(), 2) * T * T;
    B.push_back(b);
  }
  std::vector<Vector> v;
  for (std::size_t j = 0; j < r; ++j) {
    Vector x = rng.vector(c, Field::rational(), 3);
    x[c - 1] = Scalar(0);
    v.push_back(x);
  }
  return AdhmDatum(B, v, c);
}

std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

TEST(LinearFormTest, EvaluationAndShape) {
  LinearForm f = form({1, -2, 3});
  EXPECT_EQ(f(ints({1, 1, 1})), Scalar(2));
  EXPECT_THROW(f(ints({1, 1})), ShapeError);
  EXPECT_TRUE(LinearForm(3).is_zero());
  EXPECT_THROW(LinearFormMatrix(1, 1, 0), ShapeError);
}

TEST(Alpha0Test, Examples) {
  AdhmDatum X({Matrix(1, 1), Matrix(1, 1)}, {ints({1})}, 1);
  LinearFormMatrix a = alpha0(X);
  ASSERT_EQ(a.rows(), 1U);
  ASSERT_EQ(a.cols(), 3U);
  EXPECT_EQ(a.entry(0, 0), form({-1, 0, 0}));
  EXPECT_EQ(a.entry(0, 1), form({0, -1, 0}));
  EXPECT_EQ(a.entry(0, 2), form({0, 0, 1}));

  AdhmDatum Y = random_datum(3, 2, 2, 5);
  EXPECT_EQ(alpha0(Y).rows(), 2U);
  EXPECT_EQ(alpha0(Y).cols(), 8U);
  // At e_n the map is (B_0 | ... | v_r).
  Matrix expected = hstack(hstack(hstack(Y.B(0), Y.B(1)), Y.B(2)), Y.framing());
  EXPECT_EQ(evaluate(alpha0(Y), ints({0, 0, 0, 1})), expected);
}

TEST(Alpha0Test, RankAtInfinityAndAtExplicitUnstableDirections) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3, c = 2 + trial % 3, r = 1 + trial % 2;
    AdhmDatum X = triangular_unstable(n, c, r, rng);
    Vector infinity = random_point(rng, n + 1);
    infinity[n] = Scalar(0);
    if (is_zero(infinity)) infinity[0] = Scalar(1);
    EXPECT_EQ(rank(evaluate(alpha0(X), infinity)), c);
    Vector p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(X.B(i)(c - 1, c - 1));
    p.emplace_back(1);
    EXPECT_LT(rank(evaluate(alpha0(X), p)), c);
  }
}

TEST(AlphaMinus1Test, BlocksForThreeVariables) {
  AdhmDatum X = random_datum(3, 2, 1, 2);
  LinearFormMatrix a = alpha_minus1(X);
  ASSERT_EQ(a.rows(), 7U);
  ASSERT_EQ(a.cols(), 6U);
  const Matrix& top = a.coefficient(3);
  // A_0 = [[B1, B2], [−B0, 0], [0, −B0]], A_1 = [[0], [B2], [−B1]] in the z_3 part.
  EXPECT_EQ(top.block(0, 0, 2, 2), X.B(1));
  EXPECT_EQ(top.block(0, 2, 2, 2), X.B(2));
  EXPECT_EQ(top.block(2, 0, 2, 2), Scalar(-1) * X.B(0));
  EXPECT_TRUE(top.block(2, 2, 2, 2).is_zero());
  EXPECT_TRUE(top.block(4, 0, 2, 2).is_zero());
  EXPECT_EQ(top.block(4, 2, 2, 2), Scalar(-1) * X.B(0));
  EXPECT_TRUE(top.block(0, 4, 2, 2).is_zero());
  EXPECT_EQ(top.block(2, 4, 2, 2), X.B(2));
  EXPECT_EQ(top.block(4, 4, 2, 2), Scalar(-1) * X.B(1));
  EXPECT_TRUE(top.block(6, 0, 1, 6).is_zero());
  // Scalar parts: −z_{i+1+k} in block row i, +z_i below.
  EXPECT_EQ(a.entry(0, 0), LinearForm(Vector{Scalar(0), Scalar(-1), Scalar(0), top(0, 0)}));
  EXPECT_EQ(a.entry(2, 0), LinearForm(Vector{Scalar(1), Scalar(0), Scalar(0), top(2, 0)}));
  EXPECT_EQ(a.entry(5, 5), LinearForm(Vector{Scalar(0), Scalar(1), Scalar(0), top(5, 5)}));
}

TEST(AlphaMinus1Test, TwoVariablesAndShapes) {
  AdhmDatum X({Matrix(1, 1), Matrix(1, 1)}, {ints({1})}, 1);
  LinearFormMatrix a = alpha_minus1(X);
  ASSERT_EQ(a.rows(), 3U);
  ASSERT_EQ(a.cols(), 1U);
  EXPECT_EQ(a.entry(0, 0), form({0, -1, 0}));
  EXPECT_EQ(a.entry(1, 0), form({1, 0, 0}));
  EXPECT_EQ(a.entry(2, 0), form({0, 0, 0}));

  AdhmDatum Y = random_datum(4, 3, 1, 8);
  EXPECT_EQ(alpha_minus1(Y).rows(), 13U);
  EXPECT_EQ(alpha_minus1(Y).cols(), 18U);
  EXPECT_EQ(alpha_minus1(random_datum(1, 2, 1, 1)).cols(), 0U);
}

TEST(AlphaMinus2Test, Examples) {
  AdhmDatum X(std::vector<Matrix>(3, Matrix(1, 1)), {ints({1})}, 1);
  LinearFormMatrix a = alpha_minus2_p3(X);
  ASSERT_EQ(a.rows(), 3U);
  EXPECT_EQ(a.entry(0, 0), form({0, 0, 1, 0}));
  EXPECT_EQ(a.entry(1, 0), form({0, -1, 0, 0}));
  EXPECT_EQ(a.entry(2, 0), form({1, 0, 0, 0}));
  AdhmDatum Y = random_datum(3, 4, 2, 3);
  EXPECT_EQ(alpha_minus2_p3(Y).rows(), 12U);
  EXPECT_EQ(alpha_minus2_p3(Y).cols(), 4U);
  EXPECT_THROW(alpha_minus2_p3(random_datum(2, 2, 1, 1)), std::invalid_argument);
}

TEST(ComposeTest, ZeroFactorsAndShapeErrors) {
  LinearFormMatrix zero(2, 3, 3);
  AdhmDatum X = random_datum(2, 1, 1, 4);
  EXPECT_TRUE(compose(zero, alpha_minus1(random_datum(2, 1, 1, 4))).is_zero());
  EXPECT_TRUE(compose(alpha0(X), LinearFormMatrix(3, 2, 3)).is_zero());
  EXPECT_THROW(compose(alpha0(X), alpha0(X)), ShapeError);
  EXPECT_THROW(compose(LinearFormMatrix(1, 3, 2), alpha_minus1(X)), ShapeError);
}

TEST(ComposeTest, NonCommutingPairLeavesCommutatorAtZnSquared) {
  AdhmDatum X({Matrix::from_ints({{0, 1}, {0, 0}}), Matrix::from_ints({{0, 0}, {1, 0}})}, {ints({1, 0})}, 2);
  QuadraticFormMatrix q = compose(alpha0(X), alpha_minus1(X));
  ASSERT_FALSE(q.is_zero());
  EXPECT_EQ(q.coefficient(2, 2), Matrix::from_ints({{1, 0}, {0, -1}}));
  // The mixed terms cancel: (B_0 z_2 − z_0)(B_1 z_2 − z_1) − (B_1 z_2 − z_1)(B_0 z_2 − z_0).
  EXPECT_TRUE(q.coefficient(0, 2).is_zero());
  EXPECT_TRUE(q.coefficient(0, 1).is_zero());
}

TEST(ComposeTest, MatchesPointwiseProduct) {
  Rng rng(21);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    AdhmDatum X = random_datum(3, 2, 2, seed);
    X.set_B(1, rng.matrix(2, 2, Field::rational(), 3));
    for (int k = 0; k < 3; ++k) {
      Vector p = random_point(rng, 4);
      EXPECT_EQ(evaluate_quadratic(compose(alpha0(X), alpha_minus1(X)), p),
                evaluate(alpha0(X), p) * evaluate(alpha_minus1(X), p));
      EXPECT_EQ(evaluate_quadratic(compose(alpha_minus1(X), alpha_minus2_p3(X)), p),
                evaluate(alpha_minus1(X), p) * evaluate(alpha_minus2_p3(X), p));
    }
  }
}

TEST(EvaluateTest, ZeroPointAndInfinity) {
  AdhmDatum X = random_datum(2, 3, 1, 6);
  EXPECT_THROW(evaluate(alpha0(X), ints({0, 0, 0})), std::invalid_argument);
  EXPECT_THROW(evaluate(alpha0(X), ints({0, 1})), ShapeError);
  Matrix at = evaluate(alpha0(X), ints({2, 0, 0}));
  EXPECT_EQ(at.block(0, 0, 3, 3), Scalar(-2) * Matrix::identity(3));
  EXPECT_TRUE(at.block(0, 3, 3, 4).is_zero());
  EXPECT_EQ(rank(at), 3U);
}

TEST(SurjectivityTest, Examples) {
  EXPECT_TRUE(surjectivity_certificate(random_datum(3, 3, 2, 1)).surjective);
  EXPECT_TRUE(surjectivity_certificate(AdhmDatum(2, 0, 1)).surjective);

  AdhmDatum X({Matrix::from_ints({{0, 1}, {0, 0}})}, {ints({1, 0})}, 2);
  auto cert = surjectivity_certificate(X);
  EXPECT_FALSE(cert.surjective);
  ASSERT_TRUE(cert.witness_available());
  EXPECT_EQ(*cert.covector, ints({0, 1}));
  EXPECT_EQ(*cert.point, ints({0, 1}));

  AdhmDatum bad({Matrix::from_ints({{0, 1}, {0, 0}}), Matrix::from_ints({{0, 0}, {1, 0}})}, {ints({1, 0})}, 2);
  EXPECT_THROW(surjectivity_certificate(bad), std::invalid_argument);
}

TEST(SurjectivityTest, IrrationalSpectrumHasNoRationalWitness) {
  // V = Q² with B_0 a rotation and v = 0: unstable, but B_0ᵀ has no rational eigenvector.
  AdhmDatum X({Matrix::from_ints({{0, -1}, {1, 0}})}, {ints({0, 0})}, 2);
  auto cert = surjectivity_certificate(X);
  EXPECT_FALSE(cert.surjective);
  EXPECT_FALSE(cert.witness_available());
  // Over F_5, −1 is a square, so a witness exists.
  Field f5 = Field::prime(5);
  auto cert5 = surjectivity_certificate(AdhmDatum({X.B(0).reduce(f5)}, {zero_vector(2, f5)}, 2, f5));
  EXPECT_TRUE(cert5.witness_available());
}

TEST(MonadProperties, VerdictIsStabilityAndWitnessesDropRank) {
  Rng rng(99);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 3, c = 1 + seed % 4, r = 1 + seed % 3;
    RandomOptions opt;
    opt.stability = seed % 2 ? StabilityRequest::unstable : StabilityRequest::stable;
    AdhmDatum X = random_datum(n, c, r, seed, opt);
    auto cert = surjectivity_certificate(X);
    EXPECT_EQ(cert.surjective, is_stable(X));
    if (cert.surjective) {
      for (int k = 0; k < 8; ++k) EXPECT_EQ(rank(evaluate(alpha0(X), random_point(rng, n + 1))), c);
      continue;
    }
    // Triangular sampling has rational spectra, so a witness always exists here.
    ASSERT_TRUE(cert.witness_available());
    const Vector& w = *cert.covector;
    Matrix wrow = Matrix::from_rows(c, std::vector<Vector>{w}, Field::rational());
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(wrow * X.B(i), (*cert.point)[i] * wrow);
    for (const auto& v : X.vs()) EXPECT_TRUE(dot(w, v).is_zero());
    EXPECT_LT(rank(evaluate(alpha0(X), *cert.point)), c);
  }
}

TEST(MonadProperties, CompositionVanishesExactlyForCommutingData) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 3, c = 1 + seed % 4, r = 1 + seed % 3;
    AdhmDatum X = random_datum(n, c, r, seed, {.stability = StabilityRequest::any});
    EXPECT_TRUE(compose(alpha0(X), alpha_minus1(X)).is_zero());
    if (n == 3) EXPECT_TRUE(compose(alpha_minus1(X), alpha_minus2_p3(X)).is_zero());
    AdhmDatum Y = X;
    const std::size_t i = rng.uniform(0, n - 1);
    Matrix b = Y.B(i);
    b(rng.uniform(0, c - 1), rng.uniform(0, c - 1)) += Scalar(1);
    Y.set_B(i, b);
    QuadraticFormMatrix q = compose(alpha0(Y), alpha_minus1(Y));
    EXPECT_EQ(q.is_zero(), is_adhm(Y));
    const Matrix top = q.coefficient(n, n);
    std::size_t col = 0;
    for (std::size_t a = 0; a + 1 < n; ++a) {
      for (std::size_t b2 = a + 1; b2 < n; ++b2, col += c) {
        EXPECT_EQ(top.block(0, col, c, c), Y.B(a) * Y.B(b2) - Y.B(b2) * Y.B(a));
      }
    }
  }
}

TEST(MonadProperties, ShapesAndHomogeneity) {
  Rng rng(8);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t c = 0; c <= 3; ++c) {
      for (std::size_t r = 1; r <= 3; ++r) {
        AdhmDatum X(n, c, r);
        EXPECT_EQ(alpha0(X).rows(), c);
        EXPECT_EQ(alpha0(X).cols(), n * c + r);
        EXPECT_EQ(alpha_minus1(X).rows(), n * c + r);
        EXPECT_EQ(alpha_minus1(X).cols(), c * binom2(n));
        if (n == 3) {
          EXPECT_EQ(alpha_minus2_p3(X).rows(), 3 * c);
          EXPECT_EQ(alpha_minus2_p3(X).cols(), c);
        }
      }
    }
  }
  AdhmDatum X = random_datum(3, 3, 2, 4);
  for (int k = 0; k < 5; ++k) {
    Vector p = random_point(rng, 4);
    Scalar lambda = rng.nonzero_scalar(Field::rational(), 7);
    EXPECT_EQ(evaluate(alpha0(X), scale(lambda, p)), lambda * evaluate(alpha0(X), p));
    EXPECT_EQ(evaluate(alpha_minus1(X), scale(lambda, p)), lambda * evaluate(alpha_minus1(X), p));
  }
}

TEST(FiberReportTest, EulerCharacteristicAndMiddleDimension) {
  Rng rng(12);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t c = 1 + seed % 3, r = 1 + seed % 3;
    AdhmDatum X = random_datum(3, c, r, seed, {.nilpotent = true});
    auto generic = fiber_report(X, random_point(rng, 4));
    EXPECT_EQ(generic.euler_characteristic, static_cast<long>(r));
    EXPECT_EQ(generic.middle_dimension, r);
    EXPECT_EQ(generic.rank_alpha0, c);
    ASSERT_TRUE(generic.rank_alpha_minus2.has_value());
    // The support of a nilpotent datum is the origin of the affine chart.
    auto origin = fiber_report(X, ints({0, 0, 0, 1}));
    EXPECT_EQ(origin.euler_characteristic, static_cast<long>(r));
    EXPECT_GT(origin.middle_dimension, r);
  }
  auto two = fiber_report(random_datum(2, 2, 1, 3), ints({1, 2, 5}));
  EXPECT_FALSE(two.rank_alpha_minus2.has_value());
  EXPECT_EQ(two.euler_characteristic, 1);
  EXPECT_THROW(fiber_report(random_datum(2, 2, 1, 3), ints({0, 0, 0})), std::invalid_argument);
}
