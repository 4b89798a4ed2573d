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

#include "hodgefil/derham.hpp"

#include <fstream>

#include <json.hpp>

#include "hodgefil/error.hpp"

namespace hodgefil {

namespace {

constexpr const char* kModule = "derham";

std::string name(const Differential& mu) {
  return mu.label.empty() ? std::string("differential") : mu.label;
}

void require_residue_free(const Differential& mu, const char* op) {
  if (mu.series.precision() <= -1) {
    throw Error(ErrorKind::InsufficientPrecision, kModule, op,
                name(mu) + " is not known through q^-1");
  }
  if (sgn(mu.series.stored(-1)) != 0) {
    throw Error(ErrorKind::ResidueObstruction, kModule, op,
                name(mu) + " has residue " + to_string(mu.series.stored(-1)));
  }
}

Rational cup_with_integral(const Differential& mu1, const LaurentSeries& integral2) {
  return residue_of_product(mu1.series, integral2);
}

}  // namespace

Differential form_to_differential(const LaurentSeries& f, std::string label) {
  return Differential{f.shifted(-1), std::move(label)};
}

std::int64_t select_jdr(const FormBasis& w2, const FormBasis& w12) {
  const auto d = static_cast<std::int64_t>(w12.size());
  if (d < 2 || w2.size() == 0) {
    throw Error(ErrorKind::NoAdmissibleJ, kModule, "select_jdr",
                "need at least two weight-12 forms and one weight-2 form");
  }
  const Exponent vd = w12.forms.back().valuation();
  Exponent max_w2 = 0;
  for (const auto& f : w2.forms) max_w2 = std::max(max_w2, f.valuation());
  for (std::int64_t j = 1; j <= d - 1; ++j) {
    const Exponent v = w12.forms[static_cast<std::size_t>(d - 1 - j)].valuation() - vd;
    if (v + max_w2 <= -1) return j;
  }
  throw Error(ErrorKind::NoAdmissibleJ, kModule, "select_jdr",
              "no j in 1.." + std::to_string(d - 1) +
                  " gives val(s_{d-j}/s_d * f) <= -1 for every weight-2 form");
}

Rational cup(const Differential& mu1, const Differential& mu2) {
  require_residue_free(mu1, "cup");
  require_residue_free(mu2, "cup");
  return cup_with_integral(mu1, antiderivative(mu2.series));
}

Matrix cup_matrix(const std::vector<Differential>& basis) {
  for (const auto& mu : basis) require_residue_free(mu, "cup_matrix");
  std::vector<LaurentSeries> integrals;
  integrals.reserve(basis.size());
  for (const auto& mu : basis) integrals.push_back(antiderivative(mu.series));
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      g(i, j) = cup_with_integral(basis[i], integrals[j]);
  return g;
}

Differential combine(const std::vector<Rational>& coeffs,
                     const std::vector<Differential>& basis, std::string label) {
  std::vector<LaurentSeries> series;
  series.reserve(basis.size());
  for (const auto& mu : basis) series.push_back(mu.series);
  return Differential{linear_combination(coeffs, series), std::move(label)};
}

DeRhamData build_raw_basis(const FormBasis& w2, const FormBasis& w12, std::int64_t j_dr) {
  const auto d = static_cast<std::int64_t>(w12.size());
  if (j_dr < 1 || j_dr > d - 1) {
    throw Error(ErrorKind::InvalidArgument, kModule, "build_raw_basis",
                "j_dR = " + std::to_string(j_dr) + " outside 1.." + std::to_string(d - 1));
  }
  DeRhamData data;
  data.genus = w2.size();
  data.j_dr = j_dr;
  data.f_dr = div(w12.forms[static_cast<std::size_t>(d - 1 - j_dr)], w12.forms.back());
  const std::size_t g = data.genus;
  for (std::size_t i = 0; i < g; ++i) {
    data.raw_basis.push_back(form_to_differential(w2.forms[i], "omega_" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < g; ++i) {
    data.raw_basis.push_back(Differential{data.f_dr * data.raw_basis[i].series,
                                          "eta_" + std::to_string(g + i)});
  }
  data.raw_cup_matrix = cup_matrix(data.raw_basis);
  if (sgn(determinant(data.raw_cup_matrix)) == 0) {
    throw Error(ErrorKind::DegenerateBasis, kModule, "build_raw_basis",
                "cup matrix of {omega_i, f_dR*omega_i} has determinant 0 (j_dR = " +
                    std::to_string(j_dr) + ")");
  }
  return data;
}

DeRhamData symplectic_complete(const DeRhamData& data,
                               const std::optional<Matrix>& override_matrix) {
  const std::size_t g = data.genus;
  const std::size_t n = 2 * g;
  DeRhamData out = data;
  Matrix p(n, n);
  if (override_matrix) {
    p = *override_matrix;
    if (p.rows() != n || p.cols() != n) {
      throw Error(ErrorKind::NotSymplectic, kModule, "symplectic_complete",
                  "override is " + std::to_string(p.rows()) + "x" +
                      std::to_string(p.cols()) + ", expected " + std::to_string(n) +
                      "x" + std::to_string(n));
    }
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (p(i, k) != (i == k ? 1 : 0)) {
          throw Error(ErrorKind::NotSymplectic, kModule, "symplectic_complete",
                      "override row " + std::to_string(i) +
                          " must equal the identity row (holomorphic block is fixed)");
        }
  } else {
    const Matrix& raw = data.raw_cup_matrix;
    if (!is_zero_block(raw, 0, 0, g, g)) {
      throw Error(ErrorKind::SingularBlock, kModule, "symplectic_complete",
                  "cup products among holomorphic differentials are not all zero");
    }
    // B(i, j) = cup(omega_i, eta_{g+j}); eta' = eta * B^{-1} pairs dually
    // with omega.
    Matrix b(g, g);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) b(i, j) = raw(i, g + j);
    Matrix binv = inverse(b, "cup block [omega_i u eta_{g+j}]");
    // Coordinates of eta'_j in the raw basis, then S(i, j) = cup(eta'_i, eta'_j).
    Matrix e(g, n);
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k) e(j, g + k) = binv(k, j);
    Matrix s = e * raw * transpose(e);
    for (std::size_t i = 0; i < g; ++i) p(i, i) = 1;
    // eta''_j = eta'_j + sum_{k<j} S(k, j) omega_k clears the eta-eta block.
    for (std::size_t j = 0; j < g; ++j) {
      for (std::size_t k = 0; k < n; ++k) p(g + j, k) = e(j, k);
      for (std::size_t k = 0; k < j; ++k) p(g + j, k) += s(k, j);
    }
  }

  out.change_of_basis = p;
  out.symplectic_basis.clear();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = p(i, k);
    out.symplectic_basis.push_back(combine(row, data.raw_basis, "omega_" + std::to_string(i)));
  }
  out.cup_matrix = cup_matrix(out.symplectic_basis);
  const Matrix c = Matrix::symplectic(g);
  if (out.cup_matrix != c) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (out.cup_matrix(i, j) != c(i, j)) {
          throw Error(ErrorKind::NotSymplectic, kModule, "symplectic_complete",
                      "cup(omega_" + std::to_string(i) + ", omega_" + std::to_string(j) +
                          ") = " + to_string(out.cup_matrix(i, j)) + ", expected " +
                          to_string(c(i, j)));
        }
  }
  return out;
}

Matrix read_matrix_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::FixtureNotFound, kModule, "read_matrix_json",
                "expected matrix file at " + path);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, kModule, "read_matrix_json", path + ": " + e.what());
  }
  if (!doc.is_array() || doc.empty() || !doc[0].is_array()) {
    throw Error(ErrorKind::SchemaError, kModule, "read_matrix_json",
                path + ": expected a non-empty array of rows");
  }
  Matrix m(doc.size(), doc[0].size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_array() || doc[i].size() != m.cols()) {
      throw Error(ErrorKind::SchemaError, kModule, "read_matrix_json",
                  path + ": row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::optional<Rational> x;
      if (doc[i][j].is_string()) x = parse_rational(doc[i][j].get<std::string>());
      if (doc[i][j].is_number_integer()) {
        x = Rational(Integer(std::to_string(doc[i][j].get<std::int64_t>())));
      }
      if (!x) {
        throw Error(ErrorKind::ParseError, kModule, "read_matrix_json",
                    path + ": entry [" + std::to_string(i) + "][" + std::to_string(j) +
                        "] is not an exact fraction");
      }
      m(i, j) = *x;
    }
  }
  return m;
}

}  // namespace hodgefil
