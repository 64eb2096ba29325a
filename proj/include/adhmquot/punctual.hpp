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

// Data supported at a single point: nilpotent tuples, the joint spectrum of a
// commuting datum, and the straight-line homotopy to the basepoint
// (0, ..., 0, e_1, ..., e_c) in the case r = c.

#include <cstddef>
#include <vector>

#include "adhmquot/adhm.hpp"
#include "adhmquot/polynomial.hpp"

namespace adhmquot {

/// B_i^c = 0 for every i.
bool is_nilpotent_tuple(const AdhmDatum& X);

/// (0, ..., 0, e_1, ..., e_c) with n matrices and r = c. Needs c ≥ 1, since a
/// datum has at least one vector.
AdhmDatum basepoint(std::size_t n, std::size_t c, Field f = Field::rational());

struct SupportPoint {
  Vector coordinates;  // joint eigenvalues (λ_0, ..., λ_{n−1})
  std::size_t multiplicity = 0;
};

/// Factorization of the characteristic polynomial of B_index restricted to
/// a joint generalized eigenspace, recorded where it does not split over Q.
struct SplittingFailure {
  std::size_t index = 0;
  std::size_t subspace_dim = 0;
  std::vector<PolynomialFactor> factors;
};

struct SupportReport {
  std::vector<SupportPoint> points;  // lexicographic in the coordinates
  bool complete = true;               // multiplicities sum to c
  std::vector<SplittingFailure> failures;
};

/// Joint generalized eigenspace decomposition: split V by B_0, each piece by
/// B_1 restricted, and so on. Rational data only; throws std::invalid_argument
/// on prime-field or non-commuting input.
SupportReport support(const AdhmDatum& X);

/// How homotopy_path rearranges the input: v's at `selected` are the greedy
/// independent prefix (in index order), the v's at `others` are paired in
/// order with `completion`, Krylov words extending the selected v's to a basis.
struct HomotopyPlan {
  std::vector<std::size_t> selected;
  std::vector<std::size_t> others;
  std::vector<Vector> completion;
  /// selected followed by others: output position → input index.
  std::vector<std::size_t> order() const;
};

/// Builds the plan. Requires stable commuting X with r = c; with
/// `experimental` any r is accepted and only min(|others|, |completion|) pairs
/// are formed, the remaining completion vectors being dropped.
HomotopyPlan homotopy_plan(const AdhmDatum& X, bool experimental = false);

/// φ(t) = (tB_0, ..., tB_{n−1}, v_selected..., w_i(1 − t) + v_{others_i}·t ...).
/// φ(1) is X with its v's in plan.order(); φ(0) is equivalent to the basepoint.
AdhmDatum homotopy_path(const AdhmDatum& X, const Scalar& t, bool experimental = false);
AdhmDatum homotopy_path(const AdhmDatum& X, const HomotopyPlan& plan, const Scalar& t);

/// X with the v's permuted into plan.order().
AdhmDatum reindexed(const AdhmDatum& X, const HomotopyPlan& plan);

struct PathSample {
  Scalar t;
  bool stable = false;
  bool commuting = false;
  bool nilpotent = false;
};

std::vector<PathSample> verify_path(const AdhmDatum& X, const std::vector<Scalar>& grid, bool experimental = false);

/// {0, 1/k, ..., 1}.
std::vector<Scalar> uniform_grid(std::size_t k);

}  // namespace adhmquot
