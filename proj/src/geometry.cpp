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

#include <stdexcept>
#include <string>

namespace adhmquot {

namespace {

std::size_t coordinate_count(const AdhmDatum& X) { return X.n() * X.c() * X.c() + X.r() * X.c(); }

void append_entries(Vector& out, const Matrix& m) {
  for (std::size_t a = 0; a < m.rows(); ++a) {
    for (std::size_t b = 0; b < m.cols(); ++b) out.push_back(m(a, b));
  }
}

std::size_t nilpotency_power(const AdhmDatum& X, const EquationSystem& sys) {
  return sys.nilpotency_power.value_or(X.c());
}

Matrix monomial_value(const AdhmDatum& X, const Monomial& alpha) {
  if (alpha.size() != X.n()) throw ShapeError("relation monomial has the wrong number of variables");
  Matrix out = Matrix::identity(X.c(), X.field());
  for (std::size_t i = 0; i < X.n(); ++i) out = out * power(X.B(i), alpha[i]);
  return out;
}

/// d(B^e) in direction d: Σ_k B^k d B^{e−1−k}.
Matrix power_derivative(const Matrix& B, const Matrix& d, std::size_t e) {
  Matrix out(B.rows(), B.cols(), B.field());
  for (std::size_t k = 0; k < e; ++k) out += power(B, k) * d * power(B, e - 1 - k);
  return out;
}

}  // namespace

Vector residual(const AdhmDatum& X, const EquationSystem& sys) {
  Vector out;
  if (sys.commutators) {
    for (const auto& m : commutators(X)) append_entries(out, m);
  }
  if (sys.nilpotency) {
    const std::size_t e = nilpotency_power(X, sys);
    for (const auto& b : X.Bs()) append_entries(out, power(b, e));
  }
  for (const auto& f : sys.variety_relations) {
    Matrix value(X.c(), X.c(), X.field());
    for (const auto& [alpha, coeff] : f.terms) value += coeff * monomial_value(X, alpha);
    append_entries(out, value);
  }
  return out;
}

Vector linearize(const AdhmDatum& X, const EquationSystem& sys, std::span<const Scalar> delta) {
  const std::size_t n = X.n(), c = X.c();
  if (delta.size() != coordinate_count(X)) throw ShapeError("direction has the wrong number of coordinates");
  std::vector<Matrix> d;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(c, c, X.field());
    for (std::size_t a = 0; a < c; ++a) {
      for (std::size_t b = 0; b < c; ++b) m(a, b) = delta[i * c * c + a * c + b];
    }
    d.push_back(std::move(m));
  }
  Vector out;
  if (sys.commutators) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        append_entries(out, d[i] * X.B(j) + X.B(i) * d[j] - d[j] * X.B(i) - X.B(j) * d[i]);
      }
    }
  }
  if (sys.nilpotency) {
    const std::size_t e = nilpotency_power(X, sys);
    for (std::size_t i = 0; i < n; ++i) append_entries(out, power_derivative(X.B(i), d[i], e));
  }
  for (const auto& f : sys.variety_relations) {
    Matrix value(c, c, X.field());
    for (const auto& [alpha, coeff] : f.terms) {
      if (alpha.size() != n) throw ShapeError("relation monomial has the wrong number of variables");
      // product rule over the ordered factors B_0^{α_0}···B_{n−1}^{α_{n−1}}
      for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] == 0) continue;
        Matrix left = Matrix::identity(c, X.field());
        for (std::size_t k = 0; k < i; ++k) left = left * power(X.B(k), alpha[k]);
        Matrix right = Matrix::identity(c, X.field());
        for (std::size_t k = i + 1; k < n; ++k) right = right * power(X.B(k), alpha[k]);
        value += coeff * (left * power_derivative(X.B(i), d[i], alpha[i]) * right);
      }
    }
    append_entries(out, value);
  }
  return out;
}

Matrix jacobian(const AdhmDatum& X, const EquationSystem& sys) {
  const Vector value = residual(X, sys);
  if (!is_zero(value)) throw std::invalid_argument("jacobian: the datum does not satisfy the equations");
  const std::size_t N = coordinate_count(X);
  // v-coordinates enter no equation, so their columns stay zero.
  const std::size_t bcols = X.n() * X.c() * X.c();
  Matrix J(value.size(), N, X.field());
  Vector delta = zero_vector(N, X.field());
  for (std::size_t k = 0; k < bcols; ++k) {
    delta[k] = Scalar::one(X.field());
    J.set_column(k, linearize(X, sys, delta));
    delta[k] = Scalar::zero(X.field());
  }
  return J;
}

std::size_t tangent_dimension(const AdhmDatum& X, const EquationSystem& sys) {
  return coordinate_count(X) - rank(jacobian(X, sys));
}

long moduli_dimension_estimate(const AdhmDatum& X, const EquationSystem& sys) {
  if (!is_stable(X)) throw std::invalid_argument("moduli dimension estimate needs a stable datum");
  const long c = static_cast<long>(X.c());
  return static_cast<long>(tangent_dimension(X, sys)) - c * c + static_cast<long>(stabilizer_lie_dimension(X));
}

EquationSystem sampler_equations(Sampler sampler) {
  EquationSystem sys;
  sys.nilpotency = sampler == Sampler::punctual;
  return sys;
}

AdhmDatum sample_point(std::size_t n, std::size_t c, std::size_t r, Sampler sampler, Rng& rng) {
  if (sampler == Sampler::punctual && c > 3) {
    throw std::invalid_argument("the punctual sampler covers c <= 3 only");
  }
  const Field f = Field::rational();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix T(c, c, f);
    for (std::size_t a = 0; a < c; ++a) {
      if (sampler == Sampler::generic) {
        T(a, a) = Scalar(static_cast<long>(a) + 1);
      } else if (a + 1 < c) {
        T(a, a + 1) = Scalar(1);
      }
    }
    std::vector<Matrix> powers{Matrix::identity(c, f)};
    for (std::size_t k = 1; k < c; ++k) powers.push_back(powers.back() * T);
    std::vector<Matrix> B;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix b(c, c, f);
      if (sampler == Sampler::generic) {
        // diagonal polynomial values at 1..c; distinct for the first matrix
        for (std::size_t k = 0; k < c; ++k) b += rng.scalar(f, 4) * powers[k];
      } else {
        for (std::size_t k = 1; k < c; ++k) {
          b += (k == 1 ? rng.nonzero_scalar(f, 4) : rng.scalar(f, 4)) * powers[k];
        }
      }
      B.push_back(std::move(b));
    }
    if (sampler == Sampler::generic && c > 0) {
      // keep B_0 regular semisimple
      bool distinct = true;
      for (std::size_t a = 0; a < c && distinct; ++a) {
        for (std::size_t b = a + 1; b < c; ++b) distinct = distinct && !(B[0](a, a) == B[0](b, b));
      }
      if (!distinct) continue;
    }
    std::vector<Vector> v;
    for (std::size_t j = 0; j < r; ++j) v.push_back(rng.vector(c, f, 3));
    AdhmDatum X(std::move(B), std::move(v), c, f);
    if (!is_stable(X)) continue;
    return act(GroupElement(rng.unimodular(c, f)), X);
  }
  throw SamplingError("sample_point: no stable sample within 64 attempts");
}

DimensionExperiment dimension_experiment(std::size_t n, std::size_t c, std::size_t r, const EquationSystem& sys,
                                         Sampler sampler, std::size_t trials, std::uint64_t seed) {
  if (!sys.variety_relations.empty()) throw std::invalid_argument("no sampler satisfies general variety relations");
  if (sys.nilpotency && sampler != Sampler::punctual) {
    throw std::invalid_argument("nilpotency equations need the punctual sampler");
  }
  if (sys.nilpotency && sys.nilpotency_power && *sys.nilpotency_power < c) {
    throw std::invalid_argument("the punctual sampler only guarantees B^c = 0");
  }
  if (sampler == Sampler::punctual && c > 3) throw std::invalid_argument("the punctual sampler covers c <= 3 only");
  DimensionExperiment out;
  out.trials = trials;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    AdhmDatum X = sample_point(n, c, r, sampler, rng);
    const std::size_t dim = tangent_dimension(X, sys);
    ++out.tangent_histogram[dim];
    ++out.moduli_histogram[moduli_dimension_estimate(X, sys)];
    out.min_tangent = out.min_tangent ? std::min(*out.min_tangent, dim) : dim;
    out.max_tangent = out.max_tangent ? std::max(*out.max_tangent, dim) : dim;
  }
  return out;
}

}  // namespace adhmquot
