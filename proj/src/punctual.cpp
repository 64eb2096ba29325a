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

#include "adhmquot/punctual.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "adhmquot/quotmod.hpp"

namespace adhmquot {

bool is_nilpotent_tuple(const AdhmDatum& X) {
  for (const auto& b : X.Bs()) {
    if (!power(b, X.c()).is_zero()) return false;
  }
  return true;
}

AdhmDatum basepoint(std::size_t n, std::size_t c, Field f) {
  std::vector<Vector> v;
  for (std::size_t j = 0; j < c; ++j) v.push_back(unit_vector(c, j, f));
  return AdhmDatum(std::vector<Matrix>(n, Matrix(c, c, f)), std::move(v), c, f);
}

namespace {

void split(const AdhmDatum& X, const Subspace& s, std::size_t i, Vector& prefix, SupportReport& out) {
  if (s.dim() == 0) return;
  if (i == X.n()) {
    out.points.push_back({prefix, s.dim()});
    return;
  }
  const Matrix& b = X.B(i);
  auto factors = factor_rational(characteristic_polynomial(restriction(s, b)));
  bool splits = true;
  for (const auto& f : factors) splits = splits && f.factor.degree() == 1;
  if (!splits) {
    out.complete = false;
    out.failures.push_back({i, s.dim(), factors});
  }
  for (const auto& f : factors) {
    if (f.factor.degree() != 1) continue;
    Scalar lambda(-f.factor.coeff(0));
    Matrix shifted = b - lambda * Matrix::identity(X.c());
    Subspace piece = kernel_within(s, power(shifted, s.dim()));
    prefix.push_back(lambda);
    split(X, piece, i + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SupportReport support(const AdhmDatum& X) {
  if (!X.field().is_rational()) throw std::invalid_argument("support is computed over Q only");
  if (!is_adhm(X)) throw std::invalid_argument("support requires commuting data");
  SupportReport out;
  Vector prefix;
  split(X, Subspace::full(X.c()), 0, prefix, out);
  std::sort(out.points.begin(), out.points.end(), [](const SupportPoint& a, const SupportPoint& b) {
    return std::lexicographical_compare(a.coordinates.begin(), a.coordinates.end(), b.coordinates.begin(),
                                        b.coordinates.end(), [](const Scalar& x, const Scalar& y) {
                                          return x.rational() < y.rational();
                                        });
  });
  return out;
}

std::vector<std::size_t> HomotopyPlan::order() const {
  std::vector<std::size_t> out = selected;
  out.insert(out.end(), others.begin(), others.end());
  return out;
}

HomotopyPlan homotopy_plan(const AdhmDatum& X, bool experimental) {
  if (!experimental && X.r() != X.c()) {
    throw std::invalid_argument("the homotopy needs r = c, got r = " + std::to_string(X.r()) +
                                " and c = " + std::to_string(X.c()));
  }
  if (!is_adhm(X)) throw std::invalid_argument("the homotopy needs commuting data");
  if (!is_stable(X)) throw std::invalid_argument("the homotopy needs stable data");
  const std::size_t c = X.c();
  HomotopyPlan plan;
  Subspace span(c, X.field());
  for (std::size_t j = 0; j < X.r(); ++j) {
    Subspace next = span.sum(Subspace::span(c, std::span(&X.v(j), 1), X.field()));
    if (next.dim() > span.dim()) {
      plan.selected.push_back(j);
      span = std::move(next);
    } else {
      plan.others.push_back(j);
    }
  }
  // Words B^α v_j by (|α|, α, j); degree c suffices since stability is reached
  // within c Krylov steps.
  std::vector<Vector> images;
  for (const auto& alpha : monomials_up_to_degree(X.n(), c)) {
    if (span.dim() == c) break;
    Matrix word = Matrix::identity(c, X.field());
    for (std::size_t i = 0; i < X.n(); ++i) word = word * power(X.B(i), alpha[i]);
    for (std::size_t j = 0; j < X.r() && span.dim() < c; ++j) {
      Vector w = word * X.v(j);
      Subspace next = span.sum(Subspace::span(c, std::span(&w, 1), X.field()));
      if (next.dim() > span.dim()) {
        plan.completion.push_back(std::move(w));
        span = std::move(next);
      }
    }
  }
  if (experimental) {
    const std::size_t pairs = std::min(plan.others.size(), plan.completion.size());
    plan.completion.resize(pairs);
  }
  return plan;
}

AdhmDatum homotopy_path(const AdhmDatum& X, const HomotopyPlan& plan, const Scalar& t) {
  std::vector<Matrix> B;
  for (const auto& b : X.Bs()) B.push_back(t * b);
  std::vector<Vector> v;
  for (auto j : plan.selected) v.push_back(X.v(j));
  const Scalar one = Scalar::one(X.field());
  for (std::size_t k = 0; k < plan.others.size(); ++k) {
    const Vector& vk = X.v(plan.others[k]);
    if (k < plan.completion.size()) {
      v.push_back(add(scale(one - t, plan.completion[k]), scale(t, vk)));
    } else {
      v.push_back(vk);
    }
  }
  return AdhmDatum(std::move(B), std::move(v), X.c(), X.field());
}

AdhmDatum homotopy_path(const AdhmDatum& X, const Scalar& t, bool experimental) {
  return homotopy_path(X, homotopy_plan(X, experimental), t);
}

AdhmDatum reindexed(const AdhmDatum& X, const HomotopyPlan& plan) {
  std::vector<Vector> v;
  for (auto j : plan.order()) v.push_back(X.v(j));
  return AdhmDatum(X.Bs(), std::move(v), X.c(), X.field());
}

std::vector<PathSample> verify_path(const AdhmDatum& X, const std::vector<Scalar>& grid, bool experimental) {
  const HomotopyPlan plan = homotopy_plan(X, experimental);
  std::vector<PathSample> out;
  for (const auto& t : grid) {
    AdhmDatum Y = homotopy_path(X, plan, t);
    out.push_back({t, is_stable(Y), is_adhm(Y), is_nilpotent_tuple(Y)});
  }
  return out;
}

std::vector<Scalar> uniform_grid(std::size_t k) {
  if (k == 0) throw std::invalid_argument("grid needs at least one step");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i <= k; ++i) out.emplace_back(static_cast<long>(i), static_cast<long>(k));
  return out;
}

}  // namespace adhmquot
