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

#include "hodgefil/hodge.hpp"

#include "hodgefil/error.hpp"

namespace hodgefil {

namespace {

constexpr const char* kModule = "hodge";

LaurentSeries integrate(const LaurentSeries& f, const std::string& what) {
  try {
    return antiderivative(f);
  } catch (const Error& e) {
    throw Error(e.kind(), kModule, "solve_gauge", what + ": " + e.datum());
  }
}

std::int64_t pole_order(const LaurentSeries& f) {
  return f.is_zero() ? 0 : std::max<std::int64_t>(0, -f.valuation());
}

}  // namespace

std::vector<LaurentSeries> omega_times_z(const DeRhamData& data, const Matrix& z) {
  const std::size_t n = data.symplectic_basis.size();
  std::vector<LaurentSeries> omega;
  omega.reserve(n);
  for (const auto& mu : data.symplectic_basis) omega.push_back(mu.series);
  std::vector<LaurentSeries> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = z(k, j);
    out.push_back(linear_combination(col, omega));
  }
  return out;
}

SeriesMatrix build_lambda(const DeRhamData& data, const Matrix& z) {
  const std::size_t n = data.symplectic_basis.size();
  SeriesMatrix lambda(n + 2, std::vector<LaurentSeries>(n + 2));
  for (std::size_t i = 0; i < n; ++i) lambda[1 + i][0] = -data.symplectic_basis[i].series;
  auto wz = omega_times_z(data, z);
  for (std::size_t j = 0; j < n; ++j) lambda[n + 1][1 + j] = -wz[j];
  return lambda;
}

GaugeSolution solve_gauge(const DeRhamData& data, const Matrix& z) {
  const std::size_t n = data.symplectic_basis.size();
  GaugeSolution sol;
  for (std::size_t i = 0; i < n; ++i) {
    sol.a.push_back(-integrate(data.symplectic_basis[i].series, "a_" + std::to_string(i)));
  }
  auto wz = omega_times_z(data, z);
  for (std::size_t j = 0; j < n; ++j) {
    sol.b.push_back(-integrate(wz[j], "b_" + std::to_string(j)));
  }
  LaurentSeries bw;
  for (std::size_t j = 0; j < n; ++j) bw = bw + sol.b[j] * data.symplectic_basis[j].series;
  sol.c = -integrate(bw, "c");
  return sol;
}

std::string verify_gauge(const GaugeSolution& gauge, const DeRhamData& data, const Matrix& z) {
  const std::size_t n = data.symplectic_basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(derivative(gauge.a[i]) + data.symplectic_basis[i].series).is_zero()) {
      return "da_" + std::to_string(i) + " != -omega_" + std::to_string(i);
    }
  }
  auto wz = omega_times_z(data, z);
  for (std::size_t j = 0; j < n; ++j) {
    if (!(derivative(gauge.b[j]) + wz[j]).is_zero()) {
      return "db_" + std::to_string(j) + " != -(omega^T Z)_" + std::to_string(j);
    }
  }
  LaurentSeries bw;
  for (std::size_t j = 0; j < n; ++j) bw = bw + gauge.b[j] * data.symplectic_basis[j].series;
  if (!(derivative(gauge.c) + bw).is_zero()) return "dc != -b^T omega";
  return "";
}

HodgeResult solve_hodge(const GaugeSolution& gauge, const DeRhamData& data,
                        const FormBasis& w12, std::int64_t j_dr) {
  const std::size_t g = data.genus;
  const auto d = static_cast<std::int64_t>(w12.size());
  HodgeResult r;
  r.j_dr = j_dr;
  r.gauge = gauge;

  r.pole_target = gauge.c;
  for (std::size_t k = g; k < 2 * g; ++k) r.pole_target = r.pole_target - gauge.b[k] * gauge.a[k];

  std::vector<LaurentSeries> quotients;
  for (std::int64_t i = j_dr - 1; i >= 1; --i) {
    r.gamma_fil_indices.push_back(d - i);
    quotients.push_back(div(w12.forms[static_cast<std::size_t>(d - i - 1)], w12.forms.back()));
  }

  for (std::size_t k = g; k < 2 * g; ++k) {
    r.max_pole_order = std::max(r.max_pole_order, pole_order(gauge.a[k]));
  }
  r.pole_bound = static_cast<std::int64_t>(g) + j_dr - 1;
  if (r.max_pole_order > r.pole_bound) {
    throw Error(ErrorKind::InconsistentSystem, kModule, "solve_hodge",
                "a_g..a_{2g-1} have a pole of order " + std::to_string(r.max_pole_order) +
                    " exceeding g + j_dR - 1 = " + std::to_string(r.pole_bound));
  }

  std::int64_t m_total = pole_order(r.pole_target);
  for (const auto& f : quotients) m_total = std::max(m_total, pole_order(f));
  m_total = std::max(m_total, r.max_pole_order);

  // Unknowns: b_fil_0..b_fil_{g-1}, then the gamma coordinates.
  r.unknowns = g + quotients.size();
  r.equations = static_cast<std::size_t>(m_total);
  Matrix a(r.equations, r.unknowns);
  std::vector<Rational> rhs(r.equations);
  for (std::int64_t e = -m_total; e <= -1; ++e) {
    const auto row = static_cast<std::size_t>(e + m_total);
    for (std::size_t k = 0; k < g; ++k) a(row, k) = -gauge.a[g + k].coefficient(e);
    for (std::size_t i = 0; i < quotients.size(); ++i) a(row, g + i) = quotients[i].coefficient(e);
    rhs[row] = -r.pole_target.coefficient(e);
  }
  LinearSolution sol = solve(a, rhs);
  if (sol.status == LinearSolution::Status::Inconsistent) {
    throw Error(ErrorKind::InconsistentSystem, kModule, "solve_hodge",
                "no b_fil, gamma_Fil cancel the principal part (" +
                    std::to_string(r.equations) + " equations, " +
                    std::to_string(r.unknowns) + " unknowns)");
  }
  if (sol.status == LinearSolution::Status::Underdetermined) {
    throw Error(ErrorKind::NonUniqueSolution, kModule, "solve_hodge",
                "principal-part matrix has rank " + std::to_string(sol.rank) + " < " +
                    std::to_string(r.unknowns) + " unknowns");
  }
  r.b_fil.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(g));
  r.gamma_fil_coeffs.assign(sol.x.begin() + static_cast<std::ptrdiff_t>(g), sol.x.end());
  r.beta_fil.assign(g, Rational(0));
  r.beta_fil.insert(r.beta_fil.end(), r.b_fil.begin(), r.b_fil.end());

  r.gamma_fil_series = linear_combination(r.gamma_fil_coeffs, quotients);
  std::vector<LaurentSeries> a2(gauge.a.begin() + static_cast<std::ptrdiff_t>(g), gauge.a.end());
  r.regular_part = r.pole_target + r.gamma_fil_series - linear_combination(r.b_fil, a2);
  if (!r.regular_part.is_zero() && r.regular_part.valuation() < 0) {
    throw Error(ErrorKind::InconsistentSystem, kModule, "solve_hodge",
                "residual principal part at q^" + std::to_string(r.regular_part.valuation()));
  }
  return r;
}

}  // namespace hodgefil
