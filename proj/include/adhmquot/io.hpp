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

// JSON formats shared by the command-line tool. Scalars are strings: "p/q"
// or "p" over Q, decimal residues over GF(p). Every document that carries
// scalars names its field once, as "field": "Q" or "GF(p)".

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "adhmquot/adhm.hpp"
#include "adhmquot/monad.hpp"
#include "adhmquot/punctual.hpp"
#include "adhmquot/quotmod.hpp"

namespace adhmquot::io {

using nlohmann::json;

/// Malformed or inconsistent input documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Field f);
json to_json(const Vector& v);
Vector vector_from_json(const json& j, std::size_t size, Field f);
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, Field f);

Field field_from_json(const json& doc);

/// {"n", "c", "r", "field", "B": [matrix...], "v": [vector...]}.
json to_json(const AdhmDatum& X);
AdhmDatum datum_from_json(const json& doc);

/// [{"alpha": [...], "j": 1-based slot, "coeff": "p/q"}, ...].
json to_json(const PolyVector& p);
PolyVector polyvector_from_json(const json& j, std::size_t n, std::size_t r, Field f);

/// {"n", "r", "field", "generators": [polyvector...]}.
json generators_to_json(std::size_t n, std::size_t r, Field f, const std::vector<PolyVector>& gens);
std::vector<PolyVector> generators_from_json(const json& doc, std::size_t& n, std::size_t& r);

/// {"rows", "cols", "vars", "field", "entries": [[[coeff of z_0, ..., z_n]...]...]}.
json to_json(const LinearFormMatrix& m);
LinearFormMatrix linear_form_matrix_from_json(const json& doc);

json to_json(const QuadraticFormMatrix& q);
json to_json(const SupportReport& rep);
json to_json(const QuotientModule& q);

/// Parses text, converting parser errors into FormatError with the
/// byte position.
json parse(const std::string& text);

/// The document with a "schema" field, "adhmquot.<kind>/1".
json with_schema(json doc, const std::string& kind);

}  // namespace adhmquot::io
