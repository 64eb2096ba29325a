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

// The extended ADHM quiver: a vertex v of dimension c carrying n commuting
// loops, and a framing vertex w of dimension 1 with r arrows into v. A datum
// is a representation with dimension vector (c, 1), arrow j being v_j.

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "adhmquot/adhm.hpp"

namespace adhmquot {

/// ϑ = (θ, θ_∞) on the wall c·θ + θ_∞ = 0.
class StabilityParameter {
 public:
  /// Throws std::invalid_argument off the wall or for non-rational scalars.
  StabilityParameter(Scalar theta, Scalar theta_inf, std::size_t c);
  static StabilityParameter on_wall(Scalar theta, std::size_t c);

  const Scalar& theta() const { return theta_; }
  const Scalar& theta_inf() const { return theta_inf_; }
  std::size_t c() const { return c_; }

 private:
  Scalar theta_;
  Scalar theta_inf_;
  std::size_t c_;
};

/// A representation of the extended ADHM quiver. Construction checks the
/// commutation relations.
class QuiverRep {
 public:
  explicit QuiverRep(AdhmDatum datum);
  const AdhmDatum& datum() const { return datum_; }
  std::pair<std::size_t, std::size_t> dimension_vector() const { return {datum_.c(), 1}; }

 private:
  AdhmDatum datum_;
};

/// Every subspace of F_p^c, grouped by dimension. Only for p ≤ 3 and c ≤ 3.
std::vector<Subspace> all_subspaces(std::size_t c, Field f);

using DimensionVector = std::pair<std::size_t, std::size_t>;

/// Dimension vectors (c′, ε) of all subrepresentations, found by enumerating
/// every subspace of F_p^c. Only for prime fields with p ≤ 3 and c ≤ 3;
/// throws std::invalid_argument otherwise.
std::set<DimensionVector> enumerate_subreps(const QuiverRep& R);

struct ThetaVerdict {
  bool stable = false;
  bool semistable = false;
};

/// The definition applied to a set of subrepresentation dimension vectors:
/// c′θ (<) ≤ 0 for (c′, 0) with c′ > 0, and c′θ + θ_∞ (<) ≤ 0 for (c′, 1) with c′ < c.
ThetaVerdict definition_verdict(const std::set<DimensionVector>& subreps, const StabilityParameter& param);

/// Strict θ-stability. For θ < 0 this is is_stable(datum); otherwise the
/// subspace oracle decides, which requires its supported range.
bool is_theta_stable(const QuiverRep& R, const StabilityParameter& param);

struct LemmaReport {
  ThetaVerdict definition;
  bool adhm_stable = false;
  bool agrees() const { return definition.stable == adhm_stable && definition.semistable == adhm_stable; }
};

/// Compares the definition-level verdict from enumerate_subreps with ADHM
/// stability. Requires θ < 0 and the oracle's supported range.
LemmaReport check_lemma(const QuiverRep& R, const StabilityParameter& param);

}  // namespace adhmquot
