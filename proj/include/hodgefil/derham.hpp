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
#include <string>
#include <vector>

#include "hodgefil/forms.hpp"
#include "hodgefil/laurent_series.hpp"
#include "hodgefil/matrix.hpp"

namespace hodgefil {

/// A differential mu = series * dq with its only pole at the cusp.
struct Differential {
  LaurentSeries series;
  std::string label;
};

struct DeRhamData {
  std::size_t genus = 0;
  std::int64_t j_dr = 0;
  LaurentSeries f_dr;
  /// omega_0..omega_{g-1}, eta_g..eta_{2g-1} with eta_{g+i} = f_dR * omega_i.
  std::vector<Differential> raw_basis;
  Matrix raw_cup_matrix;
  /// symplectic_basis[i] = sum_k change_of_basis(i, k) * raw_basis[k].
  std::vector<Differential> symplectic_basis;
  Matrix change_of_basis;
  /// Cup matrix of symplectic_basis, recomputed from the series (equals C).
  Matrix cup_matrix;
};

/// omega_f = f dq/q, stored as the dq-coefficient f/q.
Differential form_to_differential(const LaurentSeries& f, std::string label = "");

/// Smallest j in 1..d-1 with val(s_{d-j}/s_d * f_i) <= -1 for every weight-2
/// form f_i. Throws NoAdmissibleJ.
std::int64_t select_jdr(const FormBasis& w2, const FormBasis& w12);

/// Cup product [mu1 u mu2] = Res(mu1 * integral(mu2)) at the cusp. Both
/// arguments must be residue-free (ResidueObstruction otherwise).
Rational cup(const Differential& mu1, const Differential& mu2);

/// Gram matrix G(i, j) = cup(basis[i], basis[j]); every entry is computed.
Matrix cup_matrix(const std::vector<Differential>& basis);

/// sum_k coeffs[k] * basis[k].
Differential combine(const std::vector<Rational>& coeffs,
                     const std::vector<Differential>& basis, std::string label = "");

/// Raw basis {omega_i, f_dR * omega_i} with its cup matrix. Throws
/// DegenerateBasis when the cup matrix is singular.
DeRhamData build_raw_basis(const FormBasis& w2, const FormBasis& w12, std::int64_t j_dr);

/// Default change of basis (keeps omega_0..omega_{g-1}; see README) or an
/// override whose first g rows must be the identity block. The resulting cup
/// matrix is recomputed and must equal C (NotSymplectic otherwise).
DeRhamData symplectic_complete(const DeRhamData& data,
                               const std::optional<Matrix>& override_matrix = std::nullopt);

/// Reads a 2g x 2g JSON array of fraction strings.
Matrix read_matrix_json(const std::string& path);

}  // namespace hodgefil
