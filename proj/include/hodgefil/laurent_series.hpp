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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hodgefil/rational.hpp"

namespace hodgefil {

using Exponent = std::int64_t;

/// Sentinel precision of a series known exactly (a Laurent polynomial).
inline constexpr Exponent kExact = std::numeric_limits<Exponent>::max();

/// Truncated Laurent series sum_{n >= v} c_n q^n + O(q^prec) over Q.
///
/// Coefficients are stored densely from the valuation; leading and trailing
/// zeros are trimmed so equal series compare equal. Every coefficient with
/// exponent below precision() is certified: exponents in [end(), precision())
/// are known zeros. A series with no nonzero coefficient is either the exact
/// zero (precision kExact) or O(q^prec); its valuation() is its precision.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(Exponent valuation, std::vector<Rational> coeffs,
                Exponent precision = kExact);

  static LaurentSeries zero(Exponent precision = kExact);
  static LaurentSeries monomial(const Rational& c, Exponent exponent,
                                Exponent precision = kExact);

  Exponent valuation() const { return coeffs_.empty() ? prec_ : val_; }
  Exponent precision() const { return prec_; }
  /// One past the last stored (nonzero) exponent.
  Exponent end() const { return coeffs_.empty() ? prec_ : val_ + size(); }
  Exponent size() const { return static_cast<Exponent>(coeffs_.size()); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const { return prec_ == kExact; }

  /// Coefficient of q^e; throws InsufficientPrecision when e >= precision().
  Rational coefficient(Exponent e) const;
  /// Coefficient of q^e without the precision check (zero outside storage).
  const Rational& stored(Exponent e) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  LaurentSeries truncated(Exponent precision) const;
  /// Multiplication by q^k.
  LaurentSeries shifted(Exponent k) const;

  /// True when both series agree on every exponent below the smaller
  /// precision.
  bool agrees_with(const LaurentSeries& other) const;

  bool operator==(const LaurentSeries& other) const = default;

 private:
  void normalize();

  Exponent val_ = 0;
  std::vector<Rational> coeffs_;
  Exponent prec_ = kExact;
};

LaurentSeries operator-(const LaurentSeries& f);
LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator*(const Rational& c, const LaurentSeries& f);

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g);
inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
  return mul(f, g);
}

/// Long division f / g. Without `terms` the quotient carries every
/// coefficient the inputs certify; when both inputs are exact and g is not a
/// monomial the quotient is infinite and `terms` must be given. Requesting
/// more terms than certifiable raises InsufficientPrecision.
LaurentSeries div(const LaurentSeries& f, const LaurentSeries& g,
                  std::optional<Exponent> terms = std::nullopt);

/// d/dq, termwise.
LaurentSeries derivative(const LaurentSeries& f);
/// Termwise integral with zero constant; the q^-1 coefficient must vanish.
LaurentSeries antiderivative(const LaurentSeries& f);
/// Coefficient of q^-1.
Rational residue(const LaurentSeries& f);
/// Coefficient of q^-1 in f*g, without forming the product.
Rational residue_of_product(const LaurentSeries& f, const LaurentSeries& g);

/// sum_i c[i] * f[i]; an empty sum is the exact zero.
LaurentSeries linear_combination(std::span<const Rational> c,
                                 std::span<const LaurentSeries> f);

/// Coefficients of q^lo .. q^hi reduced into F_p.
std::vector<std::uint32_t> reduce_mod(const LaurentSeries& f, std::uint32_t p,
                                      Exponent lo, Exponent hi);

/// Human-readable form, e.g. "q^-3 + q^-2 + 3*q^-1 + 70 + 9*q + O(q^2)".
/// At most max_terms nonzero terms are printed.
std::string to_string(const LaurentSeries& f, std::size_t max_terms = 32);

}  // namespace hodgefil
