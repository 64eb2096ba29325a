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

#include "adhmquot/quiver.hpp"

#include <gtest/gtest.h>

#include "adhmquot/random.hpp"

using namespace adhmquot;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

Vector residues(Field f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar::from_int(f, x));
  return v;
}

std::set<DimensionVector> dims(std::initializer_list<DimensionVector> xs) { return xs; }

}  // namespace

TEST(StabilityParameterTest, WallConstraint) {
  auto p = StabilityParameter::on_wall(Scalar(-1), 3);
  EXPECT_EQ(p.theta_inf(), Scalar(3));
  EXPECT_NO_THROW(StabilityParameter(Scalar(1, 2), Scalar(-1), 2));
  EXPECT_THROW(StabilityParameter(Scalar(1), Scalar(1), 2), std::invalid_argument);
  EXPECT_THROW(StabilityParameter(Scalar::one(F3), Scalar::zero(F3), 0), std::invalid_argument);
}

TEST(QuiverRepTest, RelationsAreChecked) {
  AdhmDatum bad({Matrix::from_ints({{0, 1}, {0, 0}}), Matrix::from_ints({{0, 0}, {1, 0}})}, {Vector{Scalar(1), Scalar(0)}}, 2);
  EXPECT_THROW(QuiverRep{bad}, std::invalid_argument);
  EXPECT_EQ(QuiverRep(AdhmDatum(2, 3, 1)).dimension_vector(), (DimensionVector{3, 1}));
}

TEST(SubspaceEnumerationTest, GaussianBinomialCounts) {
  EXPECT_EQ(all_subspaces(2, F2).size(), 5U);
  EXPECT_EQ(all_subspaces(3, F2).size(), 16U);
  EXPECT_EQ(all_subspaces(3, F3).size(), 28U);
  EXPECT_EQ(all_subspaces(0, F2).size(), 1U);
  auto subs = all_subspaces(3, F3);
  for (std::size_t a = 0; a < subs.size(); ++a) {
    for (std::size_t b = a + 1; b < subs.size(); ++b) EXPECT_FALSE(subs[a] == subs[b]);
  }
  EXPECT_THROW(all_subspaces(4, F2), std::invalid_argument);
  EXPECT_THROW(all_subspaces(2, Field::prime(5)), std::invalid_argument);
}

TEST(EnumerateSubrepsTest, Examples) {
  QuiverRep zero(AdhmDatum({Matrix(1, 1, F2)}, {residues(F2, {0})}, 1, F2));
  EXPECT_EQ(enumerate_subreps(zero), dims({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));

  QuiverRep jordan(AdhmDatum({Matrix::from_ints({{0, 1}, {0, 0}}, F2)}, {residues(F2, {0, 1})}, 2, F2));
  EXPECT_EQ(enumerate_subreps(jordan), dims({{0, 0}, {1, 0}, {2, 0}, {2, 1}}));

  EXPECT_THROW(enumerate_subreps(QuiverRep(AdhmDatum(1, 2, 1))), std::invalid_argument);
  EXPECT_THROW(enumerate_subreps(QuiverRep(AdhmDatum(1, 4, 1, F2))), std::invalid_argument);
}

TEST(ThetaStabilityTest, Examples) {
  AdhmDatum X = random_datum(2, 3, 2, 4);
  EXPECT_TRUE(is_theta_stable(QuiverRep(X), StabilityParameter(Scalar(-1), Scalar(3), 3)));
  AdhmDatum Z = X;
  for (std::size_t j = 0; j < Z.r(); ++j) Z.set_v(j, zero_vector(3, Field::rational()));
  EXPECT_FALSE(is_theta_stable(QuiverRep(Z), StabilityParameter::on_wall(Scalar(-1), 3)));
  EXPECT_THROW(is_theta_stable(QuiverRep(X), StabilityParameter::on_wall(Scalar(0), 3)), std::invalid_argument);
  EXPECT_THROW(is_theta_stable(QuiverRep(X), StabilityParameter::on_wall(Scalar(-1), 2)), std::invalid_argument);
}

TEST(ThetaStabilityTest, NonNegativeThetaUsesTheOracle) {
  // With θ ≥ 0 the subrepresentation (V, 0) gives c·θ ≥ 0, so nothing with c ≥ 1 is stable;
  // at θ = 0 everything is semistable.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomOptions opt{.stability = StabilityRequest::any, .field = F3};
    QuiverRep R(random_datum(2, 1 + seed % 3, 2, seed, opt));
    const std::size_t c = R.datum().c();
    EXPECT_FALSE(is_theta_stable(R, StabilityParameter::on_wall(Scalar(0), c)));
    EXPECT_FALSE(is_theta_stable(R, StabilityParameter::on_wall(Scalar(1, 3), c)));
    auto verdict = definition_verdict(enumerate_subreps(R), StabilityParameter::on_wall(Scalar(0), c));
    EXPECT_TRUE(verdict.semistable);
    EXPECT_FALSE(verdict.stable);
  }
  QuiverRep empty(AdhmDatum(1, 0, 1, F2));
  EXPECT_TRUE(is_theta_stable(empty, StabilityParameter::on_wall(Scalar(0), 0)));
}

TEST(CheckLemmaTest, Examples) {
  auto param = StabilityParameter::on_wall(Scalar(-1), 2);
  std::vector<Vector> frame{residues(F2, {1, 0}), residues(F2, {0, 1})};
  QuiverRep base(AdhmDatum(std::vector<Matrix>(2, Matrix(2, 2, F2)), frame, 2, F2));
  auto rep = check_lemma(base, param);
  EXPECT_TRUE(rep.definition.stable);
  EXPECT_TRUE(rep.adhm_stable);
  EXPECT_TRUE(rep.agrees());

  QuiverRep zeroed(AdhmDatum(std::vector<Matrix>(2, Matrix(2, 2, F2)), {zero_vector(2, F2), zero_vector(2, F2)}, 2, F2));
  auto rep0 = check_lemma(zeroed, param);
  EXPECT_FALSE(rep0.definition.stable);
  EXPECT_FALSE(rep0.definition.semistable);
  EXPECT_FALSE(rep0.adhm_stable);
  EXPECT_THROW(check_lemma(base, StabilityParameter::on_wall(Scalar(1), 2)), std::invalid_argument);
}

TEST(QuiverProperties, LemmaContainmentAndInvariance) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Field f = seed % 2 ? F3 : F2;
    const std::size_t n = 1 + seed % 3, c = 1 + seed % 3, r = 1 + (seed / 3) % 2;
    RandomOptions opt{.stability = seed % 3 == 0 ? StabilityRequest::unstable : StabilityRequest::any, .field = f};
    AdhmDatum X = random_datum(n, c, r, seed, opt);
    QuiverRep R(X);
    auto subs = enumerate_subreps(R);
    for (const auto& [cp, eps] : subs) {
      if (eps == 1) EXPECT_TRUE(subs.count({cp, 0}));
    }
    EXPECT_TRUE(subs.count({0, 0}));
    EXPECT_TRUE(subs.count({c, 1}));
    auto param = StabilityParameter::on_wall(Scalar(-1), c);
    EXPECT_TRUE(check_lemma(R, param).agrees()) << "seed " << seed;
    Rng rng(seed);
    QuiverRep moved(act(GroupElement(rng.unimodular(c, f)), X));
    EXPECT_EQ(enumerate_subreps(moved), subs);
    EXPECT_EQ(is_theta_stable(moved, param), is_theta_stable(R, param));
  }
}
