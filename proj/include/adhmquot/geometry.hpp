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

// Tangent spaces of the ADHM equations at exact points. Coordinates of a
// datum are ordered B_0, ..., B_{n−1} (row-major entries), then v_1, ..., v_r,
// for n·c² + r·c in total.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "adhmquot/adhm.hpp"
#include "adhmquot/quotmod.hpp"
#include "adhmquot/random.hpp"

namespace adhmquot {

/// Σ coeff·z^α in n commuting variables; evaluated on a datum as the ordered
/// product B_0^{α_0}···B_{n−1}^{α_{n−1}}.
struct VarietyRelation {
  std::map<Monomial, Scalar> terms;
};

struct EquationSystem {
  bool commutators = true;
  /// Entries of B_i^e = 0 for every i, with e = c unless given.
  bool nilpotency = false;
  std::optional<std::size_t> nilpotency_power;
  std::vector<VarietyRelation> variety_relations;
};

/// Every scalar equation of sys at X, in Jacobian row order: commutator
/// entries for i < j, then powers B_i^e, then relations, each row-major.
Vector residual(const AdhmDatum& X, const EquationSystem& sys);

/// Derivative of residual at X in the direction of the coordinate vector delta.
Vector linearize(const AdhmDatum& X, const EquationSystem& sys, std::span<const Scalar> delta);

/// Throws std::invalid_argument when X does not satisfy sys.
Matrix jacobian(const AdhmDatum& X, const EquationSystem& sys);
std::size_t tangent_dimension(const AdhmDatum& X, const EquationSystem& sys);

/// tangent_dimension − c² + stabilizer_lie_dimension. Throws
/// std::invalid_argument for unstable X.
long moduli_dimension_estimate(const AdhmDatum& X, const EquationSystem& sys);

enum class Sampler { generic, punctual };

/// Stable points satisfying the sampler's equations: every B_i a polynomial
/// in one regular matrix T, semisimple with distinct eigenvalues (generic)
/// or nilpotent with a single Jordan block and non-zero linear coefficient
/// (punctual, c ≤ 3), conjugated by a random unimodular matrix.
AdhmDatum sample_point(std::size_t n, std::size_t c, std::size_t r, Sampler sampler, Rng& rng);

/// The equations a sampler's points are built to satisfy.
EquationSystem sampler_equations(Sampler sampler);

struct DimensionExperiment {
  std::size_t trials = 0;
  std::optional<std::size_t> min_tangent;
  std::optional<std::size_t> max_tangent;
  std::map<std::size_t, std::size_t> tangent_histogram;
  std::map<long, std::size_t> moduli_histogram;
};

/// Tangent dimensions at `trials` sampled points. sys must be among the
/// equations the sampler satisfies; throws std::invalid_argument when no
/// sampler fits (variety relations, nilpotency without the punctual
/// sampler, or punctual with c > 3).
DimensionExperiment dimension_experiment(std::size_t n, std::size_t c, std::size_t r, const EquationSystem& sys,
                                         Sampler sampler, std::size_t trials, std::uint64_t seed);

}  // namespace adhmquot
