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

#include "hodgefil/matrix.hpp"

#include <utility>

#include "hodgefil/error.hpp"

namespace hodgefil {

namespace {

constexpr const char* kModule = "linalg";

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::InvalidArgument, kModule, op, "shape mismatch");
  }
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::InvalidArgument, kModule, "Matrix", "ragged rows");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::symplectic(std::size_t g) {
  Matrix m(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    m(i, g + i) = 1;
    m(g + i, i) = -1;
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::InvalidArgument, kModule, "mul", "shape mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  return a + Rational(-1) * b;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Rational trace(const Matrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

Rational determinant(const Matrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorKind::InvalidArgument, kModule, "determinant", "matrix not square");
  }
  Matrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return rref(m, m.cols()).size();
}

Matrix inverse(const Matrix& a, const std::string& what) {
  if (!a.is_square()) {
    throw Error(ErrorKind::InvalidArgument, kModule, "inverse", what + " is not square");
  }
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  if (rref(aug, n).size() != n) {
    throw Error(ErrorKind::SingularBlock, kModule, "inverse", what + " is singular");
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

bool is_zero_block(const Matrix& a, std::size_t r0, std::size_t c0,
                   std::size_t nr, std::size_t nc) {
  for (std::size_t i = r0; i < r0 + nr; ++i)
    for (std::size_t j = c0; j < c0 + nc; ++j)
      if (sgn(a(i, j)) != 0) return false;
  return true;
}

bool is_scalar(const Matrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i == j ? a(i, j) != a(0, 0) : sgn(a(i, j)) != 0) return false;
  return true;
}

LinearSolution solve(const Matrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorKind::InvalidArgument, kModule, "solve",
                "right-hand side length does not match row count");
  }
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug, n);
  LinearSolution sol;
  sol.rank = pivots.size();
  for (std::size_t i = sol.rank; i < aug.rows(); ++i) {
    if (sgn(aug(i, n)) != 0) {
      sol.status = LinearSolution::Status::Inconsistent;
      sol.inconsistent_row = i;
      return sol;
    }
  }
  if (sol.rank < n) {
    sol.status = LinearSolution::Status::Underdetermined;
    return sol;
  }
  sol.status = LinearSolution::Status::Unique;
  sol.x.resize(n);
  for (std::size_t r = 0; r < n; ++r) sol.x[pivots[r]] = aug(r, n);
  return sol;
}

}  // namespace hodgefil
