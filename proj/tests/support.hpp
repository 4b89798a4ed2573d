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

// Shared helpers for the doctest suites.
#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hodgefil/pipeline.hpp"

namespace hodgefil::test {

inline Rational q(const std::string& s) {
  auto x = parse_rational(s);
  if (!x) throw std::invalid_argument("bad rational literal " + s);
  return *x;
}

/// Series from coefficient literals starting at q^v.
inline LaurentSeries series(Exponent v, const std::vector<std::string>& coeffs,
                            Exponent prec = kExact) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(q(s));
  return LaurentSeries(v, std::move(c), prec);
}

inline Matrix matrix(const std::vector<std::vector<std::string>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = q(rows[i][j]);
  return m;
}

/// True when f's coefficients from its valuation match `expected` (starting
/// at exponent v) term by term.
inline bool starts_with(const LaurentSeries& f, Exponent v,
                        const std::vector<std::string>& expected) {
  if (!f.is_zero() && f.valuation() < v) return false;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const Exponent e = v + static_cast<Exponent>(k);
    if (e >= f.precision() || f.stored(e) != q(expected[k])) return false;
  }
  return true;
}

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(HODGEFIL_DATA_DIR) / name;
}

inline RunConfig config_for(std::int64_t level, bool paper_basis) {
  RunConfig c;
  c.level = level;
  c.prime = 3;
  if (paper_basis) c.basis_override = data_file("paper" + std::to_string(level) + ".json").string();
  return c;
}

/// Pipelines are expensive for the larger levels; cache per (level, basis).
inline const BasisStage& basis_stage(std::int64_t level, bool paper_basis) {
  static std::map<std::pair<std::int64_t, bool>, BasisStage> cache;
  auto key = std::make_pair(level, paper_basis);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, run_basis(config_for(level, paper_basis))).first;
  return it->second;
}

inline const HodgeStage& hodge_stage(std::int64_t level, bool paper_basis) {
  static std::map<std::pair<std::int64_t, bool>, HodgeStage> cache;
  auto key = std::make_pair(level, paper_basis);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, run_hodge(config_for(level, paper_basis),
                                      basis_stage(level, paper_basis))).first;
  }
  return it->second;
}

/// Deterministic random series with small rational coefficients.
class SeriesGen {
 public:
  explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

  Rational coefficient() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return make_rational(num(rng_), den(rng_));
  }

  /// Random series with valuation in [vlo, vhi] and `length` stored terms,
  /// known to O(q^{v + length}) or exact.
  LaurentSeries next(Exponent vlo, Exponent vhi, Exponent length, bool exact = false) {
    std::uniform_int_distribution<Exponent> val(vlo, vhi);
    const Exponent v = val(rng_);
    std::vector<Rational> c;
    for (Exponent i = 0; i < length; ++i) c.push_back(coefficient());
    if (sgn(c[0]) == 0) c[0] = 1;
    return LaurentSeries(v, std::move(c), exact ? kExact : v + length);
  }

  /// Random series with no q^-1 term.
  LaurentSeries residue_free(Exponent vlo, Exponent vhi, Exponent length) {
    LaurentSeries f = next(vlo, vhi, length);
    if (f.precision() > -1 && sgn(f.stored(-1)) != 0) {
      f = f - LaurentSeries::monomial(f.stored(-1), -1);
    }
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hodgefil::test
