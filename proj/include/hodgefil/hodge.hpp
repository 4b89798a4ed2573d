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
#include <vector>

#include "hodgefil/correspondence.hpp"
#include "hodgefil/derham.hpp"
#include "hodgefil/forms.hpp"

namespace hodgefil {

/// (2g+2) x (2g+2) matrix of dq-coefficient series.
using SeriesMatrix = std::vector<std::vector<LaurentSeries>>;

/// Lambda = -[[0, 0, 0], [omega, 0, 0], [0, omega^T Z, 0]] (the eta slot is
/// zero because the curve has a single cusp).
SeriesMatrix build_lambda(const DeRhamData& data, const Matrix& z);

/// (omega^T Z)_j = sum_k omega_k Z(k, j).
std::vector<LaurentSeries> omega_times_z(const DeRhamData& data, const Matrix& z);

/// Solution of G^{-1} dG = Lambda with zero integration constants:
/// da = -omega, db^T = -omega^T Z, dc = -b^T omega.
struct GaugeSolution {
  std::vector<LaurentSeries> a;
  std::vector<LaurentSeries> b;
  LaurentSeries c;
};

GaugeSolution solve_gauge(const DeRhamData& data, const Matrix& z);

/// Empty when the re-differentiation identities hold on every certified
/// coefficient; otherwise describes the first failure.
std::string verify_gauge(const GaugeSolution& gauge, const DeRhamData& data, const Matrix& z);

struct HodgeResult {
  std::int64_t j_dr = 0;
  EndoMatrix tp;
  EndoMatrix z;
  GaugeSolution gauge;
  /// c - sum_{k>=g} b_k a_k.
  LaurentSeries pole_target;
  std::vector<Rational> b_fil;
  /// (0_g, b_fil).
  std::vector<Rational> beta_fil;
  /// Coordinates against s_{d-(j-1)}/s_d, ..., s_{d-1}/s_d.
  std::vector<Rational> gamma_fil_coeffs;
  /// Indices k of the forms s_k paired with gamma_fil_coeffs (1-based).
  std::vector<std::int64_t> gamma_fil_indices;
  LaurentSeries gamma_fil_series;
  /// c + gamma_Fil - b_fil^T N^T a - b^T N N^T a; has no principal part.
  LaurentSeries regular_part;
  /// Deepest pole among a_g..a_{2g-1} and the bound g + j_dR - 1.
  std::int64_t max_pole_order = 0;
  std::int64_t pole_bound = 0;
  /// Number of matched exponents and unknowns in the linear system.
  std::size_t equations = 0;
  std::size_t unknowns = 0;
};

/// Solves for b_fil and gamma_Fil so that the target has no negative powers
/// of q. Throws InconsistentSystem or NonUniqueSolution.
HodgeResult solve_hodge(const GaugeSolution& gauge, const DeRhamData& data,
                        const FormBasis& w12, std::int64_t j_dr);

}  // namespace hodgefil
