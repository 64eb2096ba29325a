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

#include "adhmquot/geometry.hpp"

#include <gtest/gtest.h>

using namespace adhmquot;

namespace {

/// A + εD with ε² = 0.
struct Dual {
  Matrix a;
  Matrix d;
};

Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.d + x.d * y.a}; }
Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.d - y.d}; }

Dual dual_power(const Dual& x, std::size_t e) {
  const std::size_t c = x.a.rows();
  Dual out{Matrix::identity(c), Matrix(c, c)};
  for (std::size_t k = 0; k < e; ++k) out = out * x;
  return out;
}

void append(Vector& out, const Matrix& m) {
  for (std::size_t a = 0; a < m.rows(); ++a) {
    for (std::size_t b = 0; b < m.cols(); ++b) out.push_back(m(a, b));
  }
}

/// ε-part of the residual at X + ε·delta, computed without any derivative formula.
Vector first_order(const AdhmDatum& X, const EquationSystem& sys, const Vector& delta) {
  const std::size_t n = X.n(), c = X.c();
  std::vector<Dual> B;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix d(c, c);
    for (std::size_t a = 0; a < c; ++a) {
      for (std::size_t b = 0; b < c; ++b) d(a, b) = delta[i * c * c + a * c + b];
    }
    B.push_back({X.B(i), d});
  }
  Vector out;
  if (sys.commutators) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) append(out, (B[i] * B[j] - B[j] * B[i]).d);
    }
  }
  if (sys.nilpotency) {
    for (std::size_t i = 0; i < n; ++i) append(out, dual_power(B[i], sys.nilpotency_power.value_or(c)).d);
  }
  for (const auto& f : sys.variety_relations) {
    Matrix sum(c, c);
    for (const auto& [alpha, coeff] : f.terms) {
      Dual m{Matrix::identity(c), Matrix(c, c)};
      for (std::size_t i = 0; i < n; ++i) m = m * dual_power(B[i], alpha[i]);
      sum += coeff * m.d;
    }
    append(out, sum);
  }
  return out;
}

EquationSystem commutators_only() { return {}; }

EquationSystem punctual_system() {
  EquationSystem sys;
  sys.nilpotency = true;
  return sys;
}

}  // namespace

TEST(JacobianTest, Examples) {
  AdhmDatum zero(3, 3, 2);
  Matrix J = jacobian(zero, commutators_only());
  EXPECT_EQ(J.rows(), 3U * 9U);
  EXPECT_EQ(J.cols(), 3U * 9U + 6U);
  EXPECT_TRUE(J.is_zero());
  EXPECT_EQ(jacobian(random_datum(1, 3, 1, 2), commutators_only()).rows(), 0U);
  AdhmDatum nc({Matrix::from_ints({{0, 1}, {0, 0}}), Matrix::from_ints({{0, 0}, {1, 0}})}, {Vector{Scalar(1), Scalar(0)}}, 2);
  EXPECT_THROW(jacobian(nc, commutators_only()), std::invalid_argument);
  EXPECT_THROW(jacobian(random_datum(2, 2, 1, 3), punctual_system()), std::invalid_argument);
}

TEST(JacobianTest, AgreesWithFirstOrderExpansion) {
  Rng rng(17);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 1 + seed % 3, c = 1 + seed % 3, r = 1 + seed % 2;
    EquationSystem sys = seed % 2 ? punctual_system() : commutators_only();
    AdhmDatum X = random_datum(n, c, r, seed, {.nilpotent = seed % 2 == 1});
    if (seed % 2) {
      // 3·B_0^c·B_{n−1} vanishes on nilpotent data and has a nonzero derivative.
      VarietyRelation f;
      Monomial alpha(n, 0);
      alpha[0] = static_cast<unsigned>(c);
      alpha[n - 1] += 1;
      f.terms[alpha] = Scalar(3);
      sys.variety_relations.push_back(f);
    }
    Matrix J = jacobian(X, sys);
    for (int k = 0; k < 4; ++k) {
      Vector delta = rng.vector(J.cols(), Field::rational(), 5);
      EXPECT_EQ(J * delta, first_order(X, sys, delta));
    }
  }
}

TEST(TangentDimensionTest, NoEquationsInOneVariable) {
  for (std::size_t c = 1; c <= 4; ++c) {
    AdhmDatum X = random_datum(1, c, 2, c);
    EXPECT_EQ(tangent_dimension(X, commutators_only()), c * c + 2 * c);
  }
}

TEST(TangentDimensionTest, GenericPlanePoints) {
  Rng rng(3);
  for (std::size_t c = 1; c <= 4; ++c) {
    for (std::size_t r = 1; r <= 3; ++r) {
      AdhmDatum X = sample_point(2, c, r, Sampler::generic, rng);
      EXPECT_EQ(tangent_dimension(X, commutators_only()), c * c + c + r * c);
      EXPECT_EQ(moduli_dimension_estimate(X, commutators_only()), static_cast<long>(c * (r + 1)));
    }
  }
}

TEST(TangentDimensionTest, PunctualLengthTwoAndThree) {
  Rng rng(4);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t r = 1; r <= 3; ++r) {
      AdhmDatum X = sample_point(n, 2, r, Sampler::punctual, rng);
      EXPECT_EQ(tangent_dimension(X, punctual_system()), n + 1 + 2 * r);
      EXPECT_EQ(moduli_dimension_estimate(X, punctual_system()), static_cast<long>(2 * r + n) - 3);
      if (n <= 3) {
        AdhmDatum Y = sample_point(n, 3, r, Sampler::punctual, rng);
        EXPECT_EQ(moduli_dimension_estimate(Y, punctual_system()), static_cast<long>(2 * n + 3 * r) - 5);
      }
    }
  }
}

TEST(ModuliEstimateTest, UnstableIsAnError) {
  RandomOptions opt{.stability = StabilityRequest::unstable};
  EXPECT_THROW(moduli_dimension_estimate(random_datum(2, 2, 1, 1, opt), commutators_only()), std::invalid_argument);
}

TEST(GeometryProperties, ConjugationInvarianceAndMonotonicity) {
  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed % 2, c = 2 + seed % 2;
    AdhmDatum X = random_datum(n, c, 2, seed, {.nilpotent = true});
    AdhmDatum Y = act(GroupElement(rng.unimodular(c, Field::rational(), 2)), X);
    EXPECT_EQ(tangent_dimension(X, commutators_only()), tangent_dimension(Y, commutators_only()));
    EXPECT_EQ(tangent_dimension(X, punctual_system()), tangent_dimension(Y, punctual_system()));
    EXPECT_LE(tangent_dimension(X, punctual_system()), tangent_dimension(X, commutators_only()));
    EXPECT_EQ(moduli_dimension_estimate(X, commutators_only()),
              static_cast<long>(tangent_dimension(X, commutators_only())) - static_cast<long>(c * c));
  }
}

TEST(DimensionExperimentTest, Examples) {
  auto plane = dimension_experiment(2, 2, 1, commutators_only(), Sampler::generic, 50, 1);
  EXPECT_EQ(plane.min_tangent, 8U);
  EXPECT_EQ(plane.max_tangent, 8U);
  EXPECT_EQ(plane.tangent_histogram.at(8), 50U);

  auto punct = dimension_experiment(3, 2, 1, punctual_system(), Sampler::punctual, 10, 2);
  EXPECT_EQ(punct.min_tangent, 6U);
  EXPECT_EQ(punct.moduli_histogram.begin()->first, 2);

  auto none = dimension_experiment(2, 2, 1, commutators_only(), Sampler::generic, 0, 3);
  EXPECT_TRUE(none.tangent_histogram.empty());
  EXPECT_FALSE(none.min_tangent.has_value());

  EXPECT_THROW(dimension_experiment(2, 4, 1, punctual_system(), Sampler::punctual, 1, 1), std::invalid_argument);
  EXPECT_THROW(dimension_experiment(2, 2, 1, punctual_system(), Sampler::generic, 1, 1), std::invalid_argument);
  EquationSystem rel;
  rel.variety_relations.push_back({});
  EXPECT_THROW(dimension_experiment(2, 2, 1, rel, Sampler::generic, 1, 1), std::invalid_argument);
}
