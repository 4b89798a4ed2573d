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

#include "hodgefil/error.hpp"

namespace hodgefil {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::ResidueObstruction: return "ResidueObstruction";
    case ErrorKind::BadDenominator: return "BadDenominator";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorKind::DependentForms: return "DependentForms";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EtaMismatch: return "EtaMismatch";
    case ErrorKind::FixtureNotFound: return "FixtureNotFound";
    case ErrorKind::NoAdmissibleJ: return "NoAdmissibleJ";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::SingularBlock: return "SingularBlock";
    case ErrorKind::InadmissiblePrime: return "InadmissiblePrime";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_data_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::PrecisionTooLow:
    case ErrorKind::DependentForms:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::EtaMismatch:
    case ErrorKind::FixtureNotFound:
    case ErrorKind::BadDenominator:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, std::string module, std::string operation,
             std::string datum)
    : std::runtime_error(std::string(to_string(kind)) + " in " + module + "::" +
                         operation + ": " + datum),
      kind_(kind),
      module_(std::move(module)),
      operation_(std::move(operation)),
      datum_(std::move(datum)) {}

}  // namespace hodgefil
