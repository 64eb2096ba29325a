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

#include "adhmquot/quotmod.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace adhmquot {

std::size_t total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::size_t{0}); }

namespace {

void monomials_of_degree(std::size_t n, std::size_t d, Monomial& prefix, std::vector<Monomial>& out) {
  const std::size_t pos = prefix.size();
  if (pos + 1 == n) {
    prefix.push_back(static_cast<unsigned>(d));
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t e = d + 1; e-- > 0;) {
    prefix.push_back(static_cast<unsigned>(e));
    monomials_of_degree(n, d - e, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d) {
  std::vector<Monomial> out;
  Monomial prefix;
  monomials_of_degree(n, d, prefix, out);
  return out;
}

/// Caches B^α·v_j, built as B_i·(B^{α - e_i} v_j) with i the first index in use.
class MonomialImages {
 public:
  explicit MonomialImages(const AdhmDatum& X) : X_(X), cache_(X.r()) {}

  const Vector& operator()(const Monomial& alpha, std::size_t slot) {
    auto& cache = cache_[slot];
    if (auto it = cache.find(alpha); it != cache.end()) return it->second;
    Vector image;
    auto first = std::find_if(alpha.begin(), alpha.end(), [](unsigned e) { return e > 0; });
    if (first == alpha.end()) {
      image = X_.v(slot);
    } else {
      const auto i = static_cast<std::size_t>(first - alpha.begin());
      Monomial lower = alpha;
      --lower[i];
      image = X_.B(i) * (*this)(lower, slot);
    }
    return cache.emplace(alpha, std::move(image)).first->second;
  }

 private:
  const AdhmDatum& X_;
  std::vector<std::map<Monomial, Vector>> cache_;
};

void require_commuting(const AdhmDatum& X, const char* op) {
  if (!is_adhm(X)) {
    throw std::invalid_argument(std::string(op) + ": the B matrices do not commute, so Φ_X is not well defined");
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(std::size_t n, std::size_t d) {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k <= d; ++k) {
    auto level = monomials_of_degree(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

PolyVector::PolyVector(std::size_t n, std::size_t r, Field f) : n_(n), r_(r), field_(f) {}

PolyVector PolyVector::unit(std::size_t n, std::size_t r, std::size_t slot, Field f) {
  PolyVector p(n, r, f);
  p.add_term(Monomial(n, 0), slot, Scalar::one(f));
  return p;
}

std::size_t PolyVector::degree() const {
  std::size_t d = 0;
  for (const auto& [term, coeff] : terms_) d = std::max(d, total_degree(term.alpha));
  return d;
}

void PolyVector::check_term(const Monomial& alpha, std::size_t slot) const {
  if (alpha.size() != n_) throw ShapeError("exponent tuple length must equal n = " + std::to_string(n_));
  if (slot >= r_) throw ShapeError("component index out of range for r = " + std::to_string(r_));
}

void PolyVector::add_term(const Monomial& alpha, std::size_t slot, const Scalar& coeff) {
  check_term(alpha, slot);
  if (coeff.field() != field_) throw ScalarModeError("coefficient field does not match the module");
  if (coeff.is_zero()) return;
  ModuleTerm key{alpha, slot};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyVector PolyVector::times_variable(std::size_t i) const {
  Monomial m(n_, 0);
  m.at(i) = 1;
  return times_monomial(m);
}

PolyVector PolyVector::times_monomial(const Monomial& m) const {
  if (m.size() != n_) throw ShapeError("monomial length must equal n");
  PolyVector out(n_, r_, field_);
  for (const auto& [term, coeff] : terms_) {
    Monomial alpha = term.alpha;
    for (std::size_t k = 0; k < n_; ++k) alpha[k] += m[k];
    out.terms_.emplace(ModuleTerm{std::move(alpha), term.slot}, coeff);
  }
  return out;
}

PolyVector& PolyVector::operator+=(const PolyVector& rhs) {
  if (rhs.n_ != n_ || rhs.r_ != r_) throw ShapeError("poly vectors of different shapes");
  for (const auto& [term, coeff] : rhs.terms_) add_term(term.alpha, term.slot, coeff);
  return *this;
}

PolyVector operator*(const Scalar& s, const PolyVector& p) {
  PolyVector out(p.n_, p.r_, p.field_);
  for (const auto& [term, coeff] : p.terms_) out.add_term(term.alpha, term.slot, s * coeff);
  return out;
}

bool operator==(const PolyVector& a, const PolyVector& b) {
  return a.n_ == b.n_ && a.r_ == b.r_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

Vector phi_apply(const AdhmDatum& X, const PolyVector& p) {
  if (p.n() != X.n() || p.r() != X.r()) throw ShapeError("poly vector shape does not match the datum");
  require_commuting(X, "phi_apply");
  MonomialImages images(X);
  Vector out = zero_vector(X.c(), X.field());
  for (const auto& [term, coeff] : p.terms()) out = add(out, scale(coeff, images(term.alpha, term.slot)));
  return out;
}

std::vector<PolyVector> kernel_basis_up_to_degree(const AdhmDatum& X, std::size_t d) {
  require_commuting(X, "kernel_basis_up_to_degree");
  const auto monomials = monomials_up_to_degree(X.n(), d);
  const std::size_t per_slot = monomials.size();
  MonomialImages images(X);
  Matrix eval(X.c(), X.r() * per_slot, X.field());
  for (std::size_t j = 0; j < X.r(); ++j) {
    for (std::size_t m = 0; m < per_slot; ++m) eval.set_column(j * per_slot + m, images(monomials[m], j));
  }
  std::vector<PolyVector> basis;
  for (const auto& vec : kernel_basis(eval).vectors()) {
    PolyVector p(X.n(), X.r(), X.field());
    for (std::size_t col = 0; col < vec.size(); ++col) {
      if (!vec[col].is_zero()) p.add_term(monomials[col % per_slot], col / per_slot, vec[col]);
    }
    basis.push_back(std::move(p));
  }
  return basis;
}

std::vector<std::size_t> hilbert_profile(const AdhmDatum& X) {
  require_commuting(X, "hilbert_profile");
  std::vector<std::size_t> profile;
  // Φ_X(F_{≤d}) is exactly the d-th Krylov iterate.
  Subspace s = Subspace::span(X.c(), X.vs(), X.field());
  profile.push_back(s.dim());
  for (;;) {
    Subspace next = s;
    for (const auto& b : X.Bs()) next = next.sum(s.image(b));
    if (next.dim() == s.dim()) break;
    profile.push_back(next.dim());
    s = std::move(next);
  }
  return profile;
}

namespace {

/// Degree-D slice of the submodule: the span of m·g over generators g and
/// monomials m with deg(m·g) ≤ D. Columns run from the largest term to the
/// smallest (degree, then lex with z_0 > ... , then slot), so the non-pivot
/// columns of the echelon form are the standard terms.
struct TruncatedQuotient {
  std::vector<ModuleTerm> columns;
  std::map<ModuleTerm, std::size_t> index;
  Echelon echelon;
  std::size_t dimension() const { return columns.size() - echelon.rank(); }
};

TruncatedQuotient truncate(std::size_t n, std::size_t r, Field f, const std::vector<PolyVector>& gens,
                           std::size_t D) {
  TruncatedQuotient tq;
  for (std::size_t k = D + 1; k-- > 0;) {
    for (const auto& m : monomials_of_degree(n, k)) {
      for (std::size_t j = 0; j < r; ++j) {
        tq.index.emplace(ModuleTerm{m, j}, tq.columns.size());
        tq.columns.push_back(ModuleTerm{m, j});
      }
    }
  }
  std::vector<PolyVector> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > D) continue;
    for (const auto& m : monomials_up_to_degree(n, D - g.degree())) rows.push_back(g.times_monomial(m));
  }
  Matrix mac(rows.size(), tq.columns.size(), f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [term, coeff] : rows[i].terms()) mac(i, tq.index.at(term)) = coeff;
  }
  tq.echelon = rref(std::move(mac));
  return tq;
}

std::optional<QuotientModule> extract(std::size_t n, std::size_t r, Field f, const std::vector<PolyVector>& gens,
                                      const TruncatedQuotient& tq, std::size_t D) {
  const std::size_t cols = tq.columns.size();
  std::vector<long> pivot_row(cols, -1);
  for (std::size_t k = 0; k < tq.echelon.pivots.size(); ++k) pivot_row[tq.echelon.pivots[k]] = static_cast<long>(k);
  // Standard terms, smallest first.
  std::vector<std::size_t> standard;
  for (std::size_t col = cols; col-- > 0;) {
    if (pivot_row[col] >= 0) continue;
    if (total_degree(tq.columns[col].alpha) >= D) return std::nullopt;
    standard.push_back(col);
  }
  const std::size_t c = standard.size();
  std::vector<long> coord(cols, -1);
  for (std::size_t s = 0; s < c; ++s) coord[standard[s]] = static_cast<long>(s);

  auto normal_form = [&](const ModuleTerm& term) {
    Vector out = zero_vector(c, f);
    const std::size_t col = tq.index.at(term);
    if (coord[col] >= 0) {
      out[coord[col]] = Scalar::one(f);
      return out;
    }
    const auto row = static_cast<std::size_t>(pivot_row[col]);
    for (std::size_t s = 0; s < c; ++s) out[s] = -tq.echelon.reduced(row, standard[s]);
    return out;
  };

  std::vector<Matrix> B;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix b(c, c, f);
    for (std::size_t s = 0; s < c; ++s) {
      ModuleTerm shifted = tq.columns[standard[s]];
      ++shifted.alpha[i];
      b.set_column(s, normal_form(shifted));
    }
    B.push_back(std::move(b));
  }
  std::vector<Vector> v;
  for (std::size_t j = 0; j < r; ++j) v.push_back(normal_form(ModuleTerm{Monomial(n, 0), j}));
  AdhmDatum X(std::move(B), std::move(v), c, f);

  if (!is_adhm(X) || !is_stable(X)) return std::nullopt;
  for (const auto& g : gens) {
    if (!is_zero(phi_apply(X, g))) return std::nullopt;
  }
  QuotientModule q{std::move(X), {}, {}, D};
  for (auto col : standard) q.basis.push_back(tq.columns[col]);
  return q;
}

}  // namespace

QuotientModule module_from_generators(std::size_t n, std::size_t r, const std::vector<PolyVector>& gens,
                                      std::optional<std::size_t> degree_cap) {
  if (gens.empty()) throw std::invalid_argument("module_from_generators: no generators given");
  const Field f = gens.front().field();
  std::size_t max_degree = 0;
  for (const auto& g : gens) {
    if (g.n() != n || g.r() != r) throw ShapeError("generator shape does not match (n, r)");
    if (g.field() != f) throw ScalarModeError("generators over different fields");
    max_degree = std::max(max_degree, g.degree());
  }
  constexpr std::size_t kHardCeiling = 64;
  std::size_t cap = degree_cap.value_or(max_degree + 2);
  bool plateau_seen = false;
  std::vector<std::size_t> profile;
  for (std::size_t D = 0; D <= cap && D <= kHardCeiling; ++D) {
    TruncatedQuotient tq = truncate(n, r, f, gens, D);
    profile.push_back(tq.dimension());
    if (D == 0 || profile[D] != profile[D - 1]) continue;
    if (!degree_cap && !plateau_seen) {
      plateau_seen = true;
      cap = std::max(cap, profile[D] + 2);
    }
    if (auto q = extract(n, r, f, gens, tq, D)) {
      q->profile = profile;
      return *std::move(q);
    }
  }
  std::string shown;
  for (auto d : profile) shown += (shown.empty() ? "" : ",") + std::to_string(d);
  throw QuotientNotFinite("quotient is not detectably of finite length up to degree " + std::to_string(cap) +
                              " (truncated dimensions: " + shown + ")",
                          profile);
}

}  // namespace adhmquot
