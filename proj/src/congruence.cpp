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

#include "hodgefil/congruence.hpp"

#include "hodgefil/error.hpp"

namespace hodgefil {

namespace {

constexpr const char* kModule = "congruence";

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& m, std::uint32_t p) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    auto inv = reduce_mod(Rational(1, m[r][c]), p);
    const std::uint64_t s = *inv;
    for (std::size_t j = c; j < cols; ++j) m[r][j] = static_cast<std::uint32_t>(m[r][j] * s % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = static_cast<std::uint32_t>((m[i][j] + (p - f) * m[r][j]) % p);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<LaurentSeries> build_A1(const DeRhamData& data) {
  const auto& basis = data.symplectic_basis;
  std::vector<LaurentSeries> integrals;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    try {
      integrals.push_back(antiderivative(basis[i].series));
    } catch (const Error& e) {
      throw Error(e.kind(), kModule, "build_A1", "omega_" + std::to_string(i) + ": " + e.datum());
    }
  }
  std::vector<LaurentSeries> rows;
  rows.reserve(basis.size() * basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) rows.push_back(integrals[i] * basis[j].series);
  return rows;
}

Exponent window_start(const std::vector<const RowSet*>& sets) {
  bool any = false;
  Exponent w = 0;
  for (const auto* s : sets)
    for (const auto& f : s->rows)
      if (!f.is_zero()) {
        w = any ? std::min(w, f.valuation()) : f.valuation();
        any = true;
      }
  return w;
}

CorankResult corank_mod_N(const std::vector<const RowSet*>& sets, std::uint32_t n,
                          std::int64_t n_N, Exponent w, DenominatorPolicy policy) {
  if (n_N <= 0) {
    throw Error(ErrorKind::InvalidArgument, kModule, "corank_mod_N",
                "window length n_N must be positive, got " + std::to_string(n_N));
  }
  CorankResult result;
  std::vector<std::vector<std::uint32_t>> m;
  for (const auto* s : sets) {
    for (std::size_t i = 0; i < s->rows.size(); ++i) {
      try {
        m.push_back(reduce_mod(s->rows[i], n, w, w + n_N - 1));
      } catch (const Error& e) {
        const std::string where = s->name + "[" + std::to_string(i) + "]";
        if (e.kind() == ErrorKind::BadDenominator && policy == DenominatorPolicy::Lenient) {
          result.skipped.push_back(SkippedRow{s->name, i, e.datum()});
          continue;
        }
        throw Error(e.kind(), kModule, "corank_mod_N", where + ": " + e.datum());
      }
    }
  }
  result.rows_used = m.size();
  result.rank = rank_mod_p(m, n);
  result.corank = result.rows_used - result.rank;
  return result;
}

CongruenceReport congruence_report(const DeRhamData& data, const FormBasis& s2full,
                                   const FormBasis& s2plus, std::int64_t n_N,
                                   DenominatorPolicy policy) {
  const std::int64_t level = s2full.level;
  if (!is_prime(level) || s2plus.level != level) {
    throw Error(ErrorKind::InvalidArgument, kModule, "congruence_report",
                "bases must share a prime level");
  }
  RowSet a1{"A1", build_A1(data)};
  RowSet a2{"A2", {}};
  for (const auto& f : s2full.forms) a2.rows.push_back(form_to_differential(f).series);
  RowSet a3{"A3", {}};
  for (const auto& f : s2plus.forms) a3.rows.push_back(form_to_differential(f).series);

  CongruenceReport report;
  report.level = level;
  report.n_N = n_N;
  report.rows_A1 = a1.rows.size();
  report.rows_A2 = a2.rows.size();
  report.rows_A3 = a3.rows.size();
  report.window_start = window_start({&a1, &a2, &a3});

  const auto p = static_cast<std::uint32_t>(level);
  CorankResult r12 = corank_mod_N({&a1, &a2}, p, n_N, report.window_start, policy);
  CorankResult r13 = corank_mod_N({&a1, &a3}, p, n_N, report.window_start, policy);
  report.corank_A1A2 = r12.corank;
  report.corank_A1A3 = r13.corank;
  report.difference = static_cast<std::int64_t>(r12.corank) - static_cast<std::int64_t>(r13.corank);
  report.skipped_rows = r12.skipped;
  for (const auto& s : r13.skipped) {
    if (s.set != "A1") report.skipped_rows.push_back(s);
  }
  if (report.difference < 0 && report.skipped_rows.empty()) {
    throw Error(ErrorKind::InconsistentSystem, kModule, "congruence_report",
                "corank(A1 u A2) < corank(A1 u A3); A3 does not reduce into the span of A2");
  }
  return report;
}

std::string summary_line(const CongruenceReport& report) {
  return "corank(A1∪A2)=" + std::to_string(report.corank_A1A2) +
         " corank(A1∪A3)=" + std::to_string(report.corank_A1A3) +
         " diff=" + std::to_string(report.difference);
}

}  // namespace hodgefil
