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

#include <stdexcept>
#include <string>

namespace adhmquot {

StabilityParameter::StabilityParameter(Scalar theta, Scalar theta_inf, std::size_t c)
    : theta_(std::move(theta)), theta_inf_(std::move(theta_inf)), c_(c) {
  if (!theta_.field().is_rational() || !theta_inf_.field().is_rational()) {
    throw std::invalid_argument("stability parameters are rational");
  }
  if (!(Scalar(static_cast<long>(c)) * theta_ + theta_inf_).is_zero()) {
    throw std::invalid_argument("stability parameter off the wall c*theta + theta_inf = 0");
  }
}

StabilityParameter StabilityParameter::on_wall(Scalar theta, std::size_t c) {
  Scalar inf = Scalar(-static_cast<long>(c)) * theta;
  return StabilityParameter(std::move(theta), std::move(inf), c);
}

QuiverRep::QuiverRep(AdhmDatum datum) : datum_(std::move(datum)) {
  if (!is_adhm(datum_)) throw std::invalid_argument("quiver representation violates the commutation relations");
}

namespace {

void check_oracle_range(const AdhmDatum& X) {
  const Field f = X.field();
  if (f.is_rational() || f.modulus() > 3 || X.c() > 3) {
    throw std::invalid_argument("subrepresentation enumeration needs GF(2) or GF(3) and c <= 3, got " + f.name() +
                                " and c = " + std::to_string(X.c()));
  }
}

}  // namespace

std::vector<Subspace> all_subspaces(std::size_t c, Field f) {
  if (f.is_rational() || f.modulus() > 3 || c > 3) throw std::invalid_argument("subspace enumeration needs GF(2) or GF(3) and c <= 3");
  std::vector<Subspace> out;
  const std::uint64_t p = f.modulus();
  for (std::size_t k = 0; k <= c; ++k) {
    // pivot columns as a bitmask with k bits set
    for (unsigned mask = 0; mask < (1U << c); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      std::vector<std::size_t> pivots;
      for (std::size_t j = 0; j < c; ++j) {
        if (mask & (1U << j)) pivots.push_back(j);
      }
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = pivots[i] + 1; j < c; ++j) {
          if (!(mask & (1U << j))) free.emplace_back(i, j);
        }
      }
      std::uint64_t count = 1;
      for (std::size_t e = 0; e < free.size(); ++e) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        Matrix rows(k, c, f);
        for (std::size_t i = 0; i < k; ++i) rows(i, pivots[i]) = Scalar::one(f);
        std::uint64_t rest = code;
        for (const auto& [i, j] : free) {
          rows(i, j) = Scalar::from_int(f, static_cast<long>(rest % p));
          rest /= p;
        }
        out.push_back(Subspace::span_rows(rows));
      }
    }
  }
  return out;
}

std::set<DimensionVector> enumerate_subreps(const QuiverRep& R) {
  const AdhmDatum& X = R.datum();
  check_oracle_range(X);
  std::set<DimensionVector> out;
  for (const auto& S : all_subspaces(X.c(), X.field())) {
    bool invariant = true;
    for (const auto& b : X.Bs()) invariant = invariant && S.is_invariant(b);
    if (!invariant) continue;
    out.insert({S.dim(), 0});
    bool framed = true;
    for (const auto& v : X.vs()) framed = framed && S.contains(v);
    if (framed) out.insert({S.dim(), 1});
  }
  return out;
}

ThetaVerdict definition_verdict(const std::set<DimensionVector>& subreps, const StabilityParameter& param) {
  ThetaVerdict verdict{true, true};
  for (const auto& [cp, eps] : subreps) {
    Scalar value = Scalar(static_cast<long>(cp)) * param.theta();
    if (eps == 0) {
      if (cp == 0) continue;
    } else {
      if (cp >= param.c()) continue;
      value = value + param.theta_inf();
    }
    if (value.sign() >= 0) verdict.stable = false;
    if (value.sign() > 0) verdict.semistable = false;
  }
  return verdict;
}

bool is_theta_stable(const QuiverRep& R, const StabilityParameter& param) {
  if (param.c() != R.datum().c()) throw std::invalid_argument("stability parameter is for a different c");
  if (param.theta().sign() < 0) return is_stable(R.datum());
  return definition_verdict(enumerate_subreps(R), param).stable;
}

LemmaReport check_lemma(const QuiverRep& R, const StabilityParameter& param) {
  if (param.c() != R.datum().c()) throw std::invalid_argument("stability parameter is for a different c");
  if (param.theta().sign() >= 0) throw std::invalid_argument("check_lemma requires theta < 0");
  LemmaReport rep;
  rep.definition = definition_verdict(enumerate_subreps(R), param);
  rep.adhm_stable = is_stable(R.datum());
  return rep;
}

}  // namespace adhmquot
