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

#include "hodgefil/serialize.hpp"

namespace hodgefil {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const LaurentSeries& f, std::optional<Exponent> terms) {
  LaurentSeries shown = f;
  if (terms && !f.is_zero()) shown = f.truncated(f.valuation() + *terms);
  Json out;
  if (shown.is_zero()) {
    out["valuation"] = nullptr;
  } else {
    out["valuation"] = shown.valuation();
  }
  Json coeffs = Json::array();
  for (const auto& c : shown.coefficients()) coeffs.push_back(to_string(c));
  out["coefficients"] = std::move(coeffs);
  if (shown.is_exact()) {
    out["precision"] = nullptr;
  } else {
    out["precision"] = shown.precision();
  }
  out["text"] = to_string(shown, 1u << 20);
  return out;
}

}  // namespace hodgefil
