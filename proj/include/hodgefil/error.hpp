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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hodgefil {

enum class ErrorKind {
  // exactseries
  ZeroDivisor,
  InsufficientPrecision,
  ResidueObstruction,
  BadDenominator,
  // formsio
  ParseError,
  SchemaError,
  PrecisionTooLow,
  DependentForms,
  DimensionMismatch,
  EtaMismatch,
  FixtureNotFound,
  // derham
  NoAdmissibleJ,
  DegenerateBasis,
  NotSymplectic,
  SingularBlock,
  // correspondence
  InadmissiblePrime,
  // hodge
  InconsistentSystem,
  NonUniqueSolution,
  // generic
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by the input files rather than the computation.
bool is_data_error(ErrorKind kind);

/// Every failure in the library is reported through this type. It names the
/// module and operation that raised it and the datum that caused it, so the
/// CLI can emit a structured error without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, std::string operation,
        std::string datum);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }
  const std::string& operation() const noexcept { return operation_; }
  const std::string& datum() const noexcept { return datum_; }

 private:
  ErrorKind kind_;
  std::string module_;
  std::string operation_;
  std::string datum_;
};

}  // namespace hodgefil
