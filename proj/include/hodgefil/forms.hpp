// Copyright 2026 The hodgefil Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodgefil/laurent_series.hpp"

namespace hodgefil {

enum class AtkinLehner { Plus, Minus, Full };

std::string to_string(AtkinLehner sign);

/// An ordered list of cusp-form q-expansions with metadata.
struct FormBasis {
  std::int64_t level = 0;
  int weight = 0;
  AtkinLehner sign = AtkinLehner::Plus;
  std::vector<LaurentSeries> forms;
  /// Every form is known modulo O(q^precision).
  Exponent precision = 0;

  std::size_t size() const { return forms.size(); }
};

/// Parses the fixture JSON schema; `source` names the input in diagnostics.
FormBasis parse_basis(const nlohmann::json& doc, const std::string& source);

/// Reads and parses a fixture file. The basis is returned as stored (not
/// echelonized). Throws FixtureNotFound, ParseError or SchemaError.
FormBasis ingest_basis(const std::filesystem::path& path);

/// Minimum fixture precision declared by the pipeline:
/// (N+1)/2 + p*(g + (d-1) + 3) + n_N.
Exponent required_precision(std::int64_t level, std::int64_t p, std::size_t g,
                            std::size_t d, std::int64_t n_N);

/// Throws PrecisionTooLow when basis.precision < required.
void check_precision(const FormBasis& basis, Exponent required,
                     const std::string& source);

/// Restricts every form to O(q^precision) (no-op when already coarser).
FormBasis truncate_basis(const FormBasis& basis, Exponent precision);

/// Reduced row echelon form of the coefficient matrix ordered by exponent:
/// strictly increasing valuations, monic leading terms, and every other form
/// has a zero coefficient at each leading exponent. Throws DependentForms.
FormBasis echelonize(const FormBasis& basis);

/// q^{(N+1)/2} prod_{n>=1} (1-q^n)^12 (1-q^{Nn})^12 + O(q^precision),
/// i.e. eta(z)^12 eta(Nz)^12.
LaurentSeries eta_product_12(std::int64_t level, Exponent precision);

struct DimensionReport {
  std::int64_t level = 0;
  std::size_t g = 0;
  std::size_t d = 0;
  /// (N+1)/2, which must equal d + g.
  std::int64_t half_level_plus_one = 0;
};

/// Checks (N+1)/2 = d + g and that the last weight-12 form equals the eta
/// product on every certified coefficient. Throws DimensionMismatch or
/// EtaMismatch (naming the first differing exponent).
DimensionReport validate_dimensions(const FormBasis& w2, const FormBasis& w12);

}  // namespace hodgefil
