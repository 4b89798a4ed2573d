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
#include <string>
#include <vector>

#include "hodgefil/derham.hpp"
#include "hodgefil/forms.hpp"

namespace hodgefil {

enum class DenominatorPolicy { Strict, Lenient };

struct SkippedRow {
  std::string set;
  std::size_t index = 0;
  std::string reason;
};

/// Rows of a coefficient matrix, labelled for diagnostics.
struct RowSet {
  std::string name;
  std::vector<LaurentSeries> rows;
};

struct CorankResult {
  std::size_t rows_used = 0;
  std::size_t rank = 0;
  std::size_t corank = 0;
  std::vector<SkippedRow> skipped;
};

/// A1 = {(integral omega_i) * omega_j : 0 <= i, j < 2g} over the symplectic
/// basis, ordered row-major in (i, j).
std::vector<LaurentSeries> build_A1(const DeRhamData& data);

/// Smallest valuation among the nonzero rows (0 when all rows are zero).
Exponent window_start(const std::vector<const RowSet*>& sets);

/// Corank over F_N of the matrix whose rows are the coefficients of
/// q^w .. q^{w+n_N-1}. Under the lenient policy rows with an N-divisible
/// denominator in the window are excluded and recorded.
CorankResult corank_mod_N(const std::vector<const RowSet*>& sets, std::uint32_t n,
                          std::int64_t n_N, Exponent w, DenominatorPolicy policy);

struct CongruenceReport {
  std::int64_t level = 0;
  std::int64_t n_N = 0;
  Exponent window_start = 0;
  std::size_t rows_A1 = 0;
  std::size_t rows_A2 = 0;
  std::size_t rows_A3 = 0;
  std::size_t corank_A1A2 = 0;
  std::size_t corank_A1A3 = 0;
  std::int64_t difference = 0;
  std::vector<SkippedRow> skipped_rows;
};

/// A2 = differentials of the full S_2(Gamma_0(N)) basis, A3 = omega_0..
/// omega_{g-1}. Reports corank(A1 u A2), corank(A1 u A3) and the difference.
CongruenceReport congruence_report(const DeRhamData& data, const FormBasis& s2full,
                                   const FormBasis& s2plus, std::int64_t n_N,
                                   DenominatorPolicy policy = DenominatorPolicy::Strict);

/// "corank(A1∪A2)=x corank(A1∪A3)=y diff=z".
std::string summary_line(const CongruenceReport& report);

}  // namespace hodgefil
