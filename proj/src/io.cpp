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

#include "adhmquot/io.hpp"

namespace adhmquot::io {

namespace {

const json& member(const json& doc, const char* key) {
  if (!doc.is_object()) throw FormatError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_member(const json& doc, const char* key) {
  const json& j = member(doc, key);
  if (!j.is_number_unsigned()) throw FormatError(std::string("field \"") + key + "\" must be a non-negative integer");
  return j.get<std::size_t>();
}

const json& array_of(const json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) {
    throw FormatError(std::string(what) + " must be an array of length " + std::to_string(size));
  }
  return j;
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j, Field f) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  throw FormatError("scalars must be strings such as \"3/4\" or integers, got " + j.dump());
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Vector vector_from_json(const json& j, std::size_t size, Field f) {
  array_of(j, size, "vector");
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e, f));
  return v;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, Field f) {
  array_of(j, rows, "matrix");
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    array_of(j[i], cols, "matrix row");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j[i][k], f);
  }
  return m;
}

Field field_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("field")) return Field::rational();
  const json& j = doc["field"];
  if (!j.is_string()) throw FormatError("\"field\" must be a string such as \"Q\" or \"GF(5)\"");
  try {
    return Field::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
}

json to_json(const AdhmDatum& X) {
  json B = json::array();
  for (const auto& b : X.Bs()) B.push_back(to_json(b));
  json v = json::array();
  for (const auto& vec : X.vs()) v.push_back(to_json(vec));
  return {{"n", X.n()}, {"c", X.c()}, {"r", X.r()}, {"field", X.field().name()}, {"B", B}, {"v", v}};
}

AdhmDatum datum_from_json(const json& doc) {
  const std::size_t n = size_member(doc, "n");
  const std::size_t c = size_member(doc, "c");
  const std::size_t r = size_member(doc, "r");
  const Field f = field_from_json(doc);
  const json& Bj = array_of(member(doc, "B"), n, "\"B\"");
  const json& vj = array_of(member(doc, "v"), r, "\"v\"");
  std::vector<Matrix> B;
  for (const auto& m : Bj) B.push_back(matrix_from_json(m, c, c, f));
  std::vector<Vector> v;
  for (const auto& x : vj) v.push_back(vector_from_json(x, c, f));
  try {
    return AdhmDatum(std::move(B), std::move(v), c, f);
  } catch (const ShapeError& e) {
    throw FormatError(e.what());
  }
}

json to_json(const PolyVector& p) {
  json out = json::array();
  for (const auto& [term, coeff] : p.terms()) {
    out.push_back({{"alpha", term.alpha}, {"j", term.slot + 1}, {"coeff", to_json(coeff)}});
  }
  return out;
}

PolyVector polyvector_from_json(const json& j, std::size_t n, std::size_t r, Field f) {
  if (!j.is_array()) throw FormatError("a module element must be an array of terms");
  PolyVector p(n, r, f);
  for (const auto& t : j) {
    const json& alpha = array_of(member(t, "alpha"), n, "\"alpha\"");
    Monomial m;
    for (const auto& e : alpha) {
      if (!e.is_number_unsigned()) throw FormatError("exponents must be non-negative integers");
      m.push_back(e.get<unsigned>());
    }
    const std::size_t slot = size_member(t, "j");
    if (slot == 0 || slot > r) throw FormatError("\"j\" must lie in 1.." + std::to_string(r));
    p.add_term(m, slot - 1, scalar_from_json(member(t, "coeff"), f));
  }
  return p;
}

json generators_to_json(std::size_t n, std::size_t r, Field f, const std::vector<PolyVector>& gens) {
  json list = json::array();
  for (const auto& g : gens) list.push_back(to_json(g));
  return {{"n", n}, {"r", r}, {"field", f.name()}, {"generators", list}};
}

std::vector<PolyVector> generators_from_json(const json& doc, std::size_t& n, std::size_t& r) {
  n = size_member(doc, "n");
  r = size_member(doc, "r");
  if (n == 0 || r == 0) throw FormatError("\"n\" and \"r\" must be positive");
  const Field f = field_from_json(doc);
  const json& list = member(doc, "generators");
  if (!list.is_array()) throw FormatError("\"generators\" must be an array");
  std::vector<PolyVector> out;
  for (const auto& g : list) out.push_back(polyvector_from_json(g, n, r, f));
  return out;
}

json to_json(const LinearFormMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m.entry(i, k).coeffs()));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"vars", m.vars()}, {"field", m.field().name()}, {"entries", entries}};
}

LinearFormMatrix linear_form_matrix_from_json(const json& doc) {
  const std::size_t rows = size_member(doc, "rows");
  const std::size_t cols = size_member(doc, "cols");
  const std::size_t vars = size_member(doc, "vars");
  if (vars == 0) throw FormatError("\"vars\" must be positive");
  const Field f = field_from_json(doc);
  const json& entries = array_of(member(doc, "entries"), rows, "\"entries\"");
  LinearFormMatrix m(rows, cols, vars, f);
  for (std::size_t i = 0; i < rows; ++i) {
    array_of(entries[i], cols, "entry row");
    for (std::size_t k = 0; k < cols; ++k) m.set_entry(i, k, LinearForm(vector_from_json(entries[i][k], vars, f)));
  }
  return m;
}

json to_json(const QuadraticFormMatrix& q) {
  json terms = json::array();
  for (const auto& [kl, m] : q.coefficients()) {
    terms.push_back({{"monomial", {kl.first, kl.second}}, {"coefficient", to_json(m)}});
  }
  return {{"rows", q.rows()}, {"cols", q.cols()}, {"vars", q.vars()}, {"field", q.field().name()}, {"terms", terms}};
}

json to_json(const SupportReport& rep) {
  json points = json::array();
  for (const auto& p : rep.points) points.push_back({{"coordinates", to_json(p.coordinates)}, {"multiplicity", p.multiplicity}});
  json failures = json::array();
  for (const auto& f : rep.failures) {
    json factors = json::array();
    for (const auto& pf : f.factors) {
      factors.push_back({{"factor", pf.factor.to_string()}, {"multiplicity", pf.multiplicity}, {"irreducible", pf.irreducible}});
    }
    failures.push_back({{"matrix", f.index}, {"subspace_dim", f.subspace_dim}, {"factors", factors}});
  }
  return {{"complete", rep.complete}, {"points", points}, {"factorizations", failures}};
}

json to_json(const QuotientModule& q) {
  json basis = json::array();
  for (const auto& t : q.basis) basis.push_back({{"alpha", t.alpha}, {"j", t.slot + 1}});
  return {{"datum", to_json(q.datum)}, {"basis", basis}, {"profile", q.profile}, {"degree", q.degree}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json with_schema(json doc, const std::string& kind) {
  doc["schema"] = "adhmquot." + kind + "/1";
  return doc;
}

}  // namespace adhmquot::io
