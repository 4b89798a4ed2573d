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

#include "hodgefil/correspondence.hpp"

#include "hodgefil/error.hpp"

namespace hodgefil {

namespace {

constexpr const char* kModule = "correspondence";

Exponent floor_div(Exponent a, Exponent b) {
  Exponent q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Exponent ceil_div(Exponent a, Exponent b) { return -floor_div(-a, b); }

}  // namespace

Differential hecke_on_differential(const Differential& mu, std::int64_t p) {
  if (p < 2 || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, kModule, "hecke_on_differential",
                "p = " + std::to_string(p) + " is not prime");
  }
  const LaurentSeries f = mu.series.shifted(1);  // mu = f dq/q
  const std::string label = "T_" + std::to_string(p) + "(" + mu.label + ")";
  if (f.is_zero() && f.is_exact()) return Differential{mu.series, label};
  const Exponent prec = f.is_exact() ? kExact : ceil_div(f.precision(), p);
  if (!f.is_exact() && f.valuation() >= f.precision()) {
    return Differential{LaurentSeries::zero(prec).shifted(-1), label};
  }
  const Exponent v = f.valuation();
  // b'_n = b_{pn} + p b_{n/p}: the lowest nonzero n is ceil(v/p) from the
  // first term and p*v from the second.
  const Exponent lo = std::min(ceil_div(v, p), v < 0 ? p * v : ceil_div(v, p));
  const Exponent hi = f.is_exact()
                          ? std::max(floor_div(f.end() - 1, p), p * (f.end() - 1)) + 1
                          : prec;
  if (hi > lo && !f.is_exact() && p * (hi - 1) >= f.precision()) {
    throw Error(ErrorKind::InsufficientPrecision, kModule, "hecke_on_differential",
                mu.label + ": coefficient q^" + std::to_string(p * (hi - 1)) +
                    " needed, known to O(q^" + std::to_string(f.precision()) + ")");
  }
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(std::max<Exponent>(0, hi - lo)));
  const Rational pr(static_cast<long>(p));
  for (Exponent n = lo; n < hi; ++n) {
    Rational x = f.stored(p * n);
    if (n % p == 0) x += pr * f.stored(n / p);
    c.push_back(std::move(x));
  }
  return Differential{LaurentSeries(lo, std::move(c), prec).shifted(-1), label};
}

Matrix hecke_cup_matrix(const std::vector<Differential>& basis, std::int64_t p) {
  const std::size_t n = basis.size();
  std::vector<Differential> images;
  images.reserve(n);
  for (const auto& mu : basis) images.push_back(hecke_on_differential(mu, p));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cup(basis[j], images[i]);
  return m;
}

Matrix hecke_from_cup(const Matrix& m, const Matrix& gram) {
  return transpose(m * inverse(gram, "cup matrix"));
}

std::int64_t next_candidate_prime(std::int64_t p, std::int64_t level) {
  std::int64_t q = p + 1;
  while (!is_prime(q) || level % q == 0) ++q;
  return q;
}

HeckeResult hecke_matrix(const DeRhamData& data, std::int64_t p, std::int64_t level) {
  if (p < 2 || !is_prime(p) || level % p == 0) {
    throw Error(ErrorKind::InvalidArgument, kModule, "hecke_matrix",
                "p = " + std::to_string(p) + " must be a prime not dividing N = " +
                    std::to_string(level));
  }
  HeckeResult out;
  out.m = hecke_cup_matrix(data.symplectic_basis, p);
  out.tp = EndoMatrix{hecke_from_cup(out.m, data.cup_matrix), p, EndoMatrix::Kind::Hecke};
  const std::size_t g = data.genus;
  if (!is_zero_block(out.tp.entries, g, 0, g, g)) {
    throw Error(ErrorKind::DegenerateBasis, kModule, "hecke_matrix",
                "T_" + std::to_string(p) +
                    " does not preserve the holomorphic subspace (bottom-left block nonzero)");
  }
  if (is_scalar(out.tp.entries)) {
    throw Error(ErrorKind::InadmissiblePrime, kModule, "hecke_matrix",
                "T_" + std::to_string(p) + " is the scalar " +
                    to_string(out.tp.entries(0, 0)) + "; try p = " +
                    std::to_string(next_candidate_prime(p, level)));
  }
  return out;
}

EndoMatrix nice_correspondence(const EndoMatrix& tp) {
  const Matrix& t = tp.entries;
  const std::size_t n = t.rows();
  if (n % 2 != 0 || !t.is_square()) {
    throw Error(ErrorKind::InvalidArgument, kModule, "nice_correspondence",
                "T_p must be 2g x 2g");
  }
  Matrix a = trace(t) * Matrix::identity(n) - Rational(static_cast<long>(n)) * t;
  if (sgn(trace(a)) != 0) {
    throw Error(ErrorKind::InconsistentSystem, kModule, "nice_correspondence",
                "Tr(Tr(T_p) I - 2g T_p) = " + to_string(trace(a)));
  }
  return EndoMatrix{a * inverse(Matrix::symplectic(n / 2), "C"), tp.prime,
                    EndoMatrix::Kind::Correspondence};
}

std::string antisymmetry_diagnostic(const Matrix& z) {
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j)
      if (z(i, j) != -z(j, i)) {
        return "Z[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
               to_string(z(i, j)) + " but Z[" + std::to_string(j) + "][" +
               std::to_string(i) + "] = " + to_string(z(j, i));
      }
  return "";
}

}  // namespace hodgefil
