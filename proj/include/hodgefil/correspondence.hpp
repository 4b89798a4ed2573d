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
#include "hodgefil/matrix.hpp"

namespace hodgefil {

struct EndoMatrix {
  enum class Kind { Hecke, Correspondence };
  Matrix entries;
  std::int64_t prime = 0;
  Kind kind = Kind::Hecke;
};

/// T_p on a differential mu = (sum a_m q^m) dq. Writing mu = f dq/q with
/// f = sum b_n q^n (b_n = a_{n-1}), T_p sends b_n to b_{pn} + p b_{n/p}.
/// A pole of order k becomes a pole of order about p*k; a series known to
/// O(q^P) maps to one known to O(q^{ceil((P+1)/p) - 1}).
Differential hecke_on_differential(const Differential& mu, std::int64_t p);

/// M(i, j) = cup(omega_j, T_p omega_i) over `basis`.
Matrix hecke_cup_matrix(const std::vector<Differential>& basis, std::int64_t p);

/// T_p = (M G^{-1})^T for a basis with Gram matrix G; with G = C this is the
/// symplectic-basis formula T_p = (M C^{-1})^T.
Matrix hecke_from_cup(const Matrix& m, const Matrix& gram);

struct HeckeResult {
  Matrix m;
  EndoMatrix tp;
};

/// T_p on the symplectic basis. Verifies the bottom-left g x g block is zero
/// (DegenerateBasis otherwise) and that T_p is not scalar (InadmissiblePrime,
/// naming the next prime to try).
HeckeResult hecke_matrix(const DeRhamData& data, std::int64_t p, std::int64_t level);

/// Smallest prime > p that does not divide `level`.
std::int64_t next_candidate_prime(std::int64_t p, std::int64_t level);

/// Z = (Tr(T_p) I - 2g T_p) C^{-1}.
EndoMatrix nice_correspondence(const EndoMatrix& tp);

/// Empty when Z^T = -Z; otherwise names the first offending entry.
std::string antisymmetry_diagnostic(const Matrix& z);

}  // namespace hodgefil
