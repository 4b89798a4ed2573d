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

#include <cstddef>
#include <string>
#include <vector>

#include "hodgefil/rational.hpp"

namespace hodgefil {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// The symplectic form C = [[0, I_g], [-I_g, 0]].
  static Matrix symplectic(std::size_t g);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, const Matrix& a);
Matrix transpose(const Matrix& a);
Rational trace(const Matrix& a);

Rational determinant(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Inverse of a square matrix; throws SingularBlock when det = 0. `what`
/// names the matrix in the diagnostic.
Matrix inverse(const Matrix& a, const std::string& what = "matrix");

bool is_zero_block(const Matrix& a, std::size_t r0, std::size_t c0,
                   std::size_t nr, std::size_t nc);
bool is_scalar(const Matrix& a);

/// Result of solving A x = b exactly by reduced row echelon form.
struct LinearSolution {
  enum class Status { Unique, Inconsistent, Underdetermined };
  Status status = Status::Inconsistent;
  std::vector<Rational> x;  // filled when status == Unique
  std::size_t rank = 0;
  /// Row of the reduced system that is violated when status == Inconsistent.
  std::size_t inconsistent_row = 0;
};

LinearSolution solve(const Matrix& a, const std::vector<Rational>& b);

}  // namespace hodgefil
