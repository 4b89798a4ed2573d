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

#include <optional>
#include <vector>

#include <json.hpp>

#include "hodgefil/laurent_series.hpp"
#include "hodgefil/matrix.hpp"

namespace hodgefil {

/// Reports use insertion-ordered objects so output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const std::vector<Rational>& v);
Json to_json(const Matrix& m);

/// {valuation, coefficients, precision, text}. With `terms` set, only the
/// coefficients of q^v .. q^{v+terms-1} are shown and precision is reported
/// as v + terms (never claiming more than is printed).
Json to_json(const LaurentSeries& f, std::optional<Exponent> terms);

}  // namespace hodgefil
