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

#include "adhmquot/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace adhmquot {

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::monomial(const mpq_class& coeff, std::size_t degree) {
  std::vector<mpq_class> c(degree + 1, mpq_class(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear(const mpq_class& root) { return Polynomial({-root, mpq_class(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class Polynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial m = *this;
  mpq_class lead = leading();
  for (auto& c : m.coeffs_) c /= lead;
  return m;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw ScalarError("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial{}, rem};
  std::vector<mpq_class> quot(rem.coeffs_.size() - divisor.coeffs_.size() + 1, mpq_class(0));
  const std::size_t dd = divisor.coeffs_.size() - 1;
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const std::size_t shift = rem.coeffs_.size() - 1 - dd;
    mpq_class factor = rem.leading() / divisor.leading();
    quot[shift] = factor;
    for (std::size_t k = 0; k <= dd; ++k) rem.coeffs_[shift + k] -= factor * divisor.coeffs_[k];
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpq_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("characteristic polynomial of a non-square matrix");
  if (!m.field().is_rational()) throw ScalarModeError("characteristic polynomial requires rational entries");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> h(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i][j] = m(i, j).rational();
  }
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t pivot = col + 1;
    while (pivot < n && sgn(h[pivot][col]) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      std::swap(h[pivot], h[col + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][pivot], h[i][col + 1]);
    }
    for (std::size_t i = col + 2; i < n; ++i) {
      if (sgn(h[i][col]) == 0) continue;
      mpq_class u = h[i][col] / h[col + 1][col];
      for (std::size_t j = 0; j < n; ++j) h[i][j] -= u * h[col + 1][j];
      for (std::size_t j = 0; j < n; ++j) h[j][col + 1] += u * h[j][i];
    }
  }
  // p_k is the characteristic polynomial of the leading k×k block.
  std::vector<Polynomial> p;
  p.emplace_back(std::vector<mpq_class>{1});
  const Polynomial x = Polynomial::monomial(1, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = (x - Polynomial({h[k - 1][k - 1]})) * p[k - 1];
    mpq_class t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t *= h[i][i - 1];
      if (sgn(t) == 0) break;
      next -= Polynomial({h[i - 1][k - 1] * t}) * p[i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace {

/// Integer coefficient vector of the primitive part.
std::vector<mpz_class> primitive_integer(const Polynomial& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content != 0) {
    if (out.back() < 0) content = -content;
    for (auto& v : out) v /= content;
  }
  return out;
}

Polynomial from_integers(const std::vector<mpz_class>& z) {
  std::vector<mpq_class> c;
  for (const auto& v : z) c.emplace_back(v);
  return Polynomial(std::move(c));
}

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long seed = 1;; ++seed) {
    mpz_class x = 2;
    mpz_class y = 2;
    mpz_class d = 1;
    auto step = [&](const mpz_class& v) {
      mpz_class r = v * v + seed;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void prime_factors(mpz_class n, std::map<mpz_class, unsigned>& out) {
  n = abs(n);
  if (n <= 1) return;
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n);
  prime_factors(d, out);
  prime_factors(n / d, out);
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::map<mpz_class, unsigned> factors;
  prime_factors(n, factors);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t current = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < current; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Square-free decomposition (Yun): square_free[k] has multiplicity k+1.
std::vector<Polynomial> yun(const Polynomial& f) {
  std::vector<Polynomial> parts;
  Polynomial a = f.monic();
  Polynomial b = a.derivative();
  Polynomial c = gcd(a, b);
  Polynomial w = a.divmod(c).quotient;
  Polynomial y = b.divmod(c).quotient;
  Polynomial z = y - w.derivative();
  while (w.degree() > 0) {
    Polynomial g = gcd(w, z);
    parts.push_back(g);
    w = w.divmod(g).quotient;
    y = z.divmod(g).quotient;
    z = y - w.derivative();
  }
  return parts;
}

/// Lagrange interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial term({mpq_class(ys[i])});
    mpq_class denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * Polynomial::linear(mpq_class(xs[j]));
      denom *= xs[i] - xs[j];
    }
    result += term * Polynomial({1 / denom});
  }
  return result;
}

bool is_integer_poly(const Polynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const mpq_class& c) { return c.get_den() == 1; });
}

constexpr std::size_t kKroneckerBudget = 2'000'000;

/// Finds a proper factor of a primitive square-free integer polynomial
/// without rational roots. Returns the zero polynomial when none exists or
/// when the search budget runs out (`exhausted` set in that case).
Polynomial kronecker_split(const Polynomial& f, bool& exhausted) {
  const long d = f.degree();
  std::vector<long> candidates;
  for (long x = 0; x <= 12; ++x) {
    candidates.push_back(x);
    if (x != 0) candidates.push_back(-x);
  }
  struct Sample {
    long x;
    mpz_class value;
    std::vector<mpz_class> divisors;
  };
  std::vector<Sample> samples;
  for (long x : candidates) {
    mpq_class v = f(mpq_class(x));
    if (sgn(v) == 0) continue;
    samples.push_back({x, v.get_num(), positive_divisors(v.get_num())});
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& a, const Sample& b) { return a.divisors.size() < b.divisors.size(); });
  for (long k = 2; 2 * k <= d; ++k) {
    const std::size_t points = static_cast<std::size_t>(k) + 1;
    if (samples.size() < points) {
      exhausted = true;
      return {};
    }
    std::vector<long> xs;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < points; ++i) {
      xs.push_back(samples[i].x);
      combos *= samples[i].divisors.size() * (i == 0 ? 1 : 2);
      if (combos > kKroneckerBudget) {
        exhausted = true;
        return {};
      }
    }
    // Mixed-radix counter over (divisor, sign) choices; the first sign stays
    // positive since g and -g are the same factor.
    std::vector<std::size_t> radix(points);
    for (std::size_t i = 0; i < points; ++i) radix[i] = samples[i].divisors.size() * (i == 0 ? 1 : 2);
    std::vector<std::size_t> digit(points, 0);
    std::vector<mpz_class> ys(points);
    for (;;) {
      for (std::size_t i = 0; i < points; ++i) {
        const std::size_t nd = samples[i].divisors.size();
        ys[i] = samples[i].divisors[digit[i] % nd];
        if (digit[i] >= nd) ys[i] = -ys[i];
      }
      Polynomial g = interpolate(xs, ys);
      if (g.degree() >= 1 && g.degree() < d && is_integer_poly(g)) {
        if (f.divmod(g).remainder.is_zero()) return g;
      }
      std::size_t pos = 0;
      while (pos < points && ++digit[pos] == radix[pos]) digit[pos++] = 0;
      if (pos == points) break;
    }
  }
  return {};
}

void split_irreducible(const Polynomial& f, std::size_t multiplicity, std::vector<PolynomialFactor>& out) {
  if (f.degree() <= 3) {
    out.push_back({f.monic(), multiplicity, true});
    return;
  }
  bool exhausted = false;
  Polynomial g = kronecker_split(from_integers(primitive_integer(f)), exhausted);
  if (g.is_zero()) {
    out.push_back({f.monic(), multiplicity, !exhausted});
    return;
  }
  split_irreducible(g, multiplicity, out);
  split_irreducible(f.divmod(g).quotient, multiplicity, out);
}

}  // namespace

std::vector<mpq_class> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw ScalarError("rational roots of the zero polynomial");
  std::vector<mpq_class> roots;
  std::vector<mpz_class> z = primitive_integer(p);
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 >= z.size()) return roots;
  const Polynomial reduced = p.divmod(Polynomial::monomial(1, low)).quotient;
  auto nums = positive_divisors(z[low]);
  auto dens = positive_divisors(z.back());
  for (const auto& q : dens) {
    for (const auto& a : nums) {
      for (int s : {1, -1}) {
        mpq_class cand(a * s, q);
        cand.canonicalize();
        if (cand.get_den() != q) continue;  // visited with a smaller denominator
        if (sgn(reduced(cand)) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<PolynomialFactor> factor_rational(const Polynomial& p) {
  if (p.is_zero()) throw ScalarError("factorization of the zero polynomial");
  std::vector<PolynomialFactor> out;
  auto parts = yun(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Polynomial rest = parts[k];
    if (rest.degree() < 1) continue;
    for (const auto& root : rational_roots(rest)) {
      out.push_back({Polynomial::linear(root), k + 1, true});
      rest = rest.divmod(Polynomial::linear(root)).quotient;
    }
    if (rest.degree() >= 1) split_irreducible(rest, k + 1, out);
  }
  std::sort(out.begin(), out.end(), [](const PolynomialFactor& a, const PolynomialFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return out;
}

}  // namespace adhmquot
