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
#include <filesystem>
#include <optional>
#include <string>

#include "hodgefil/congruence.hpp"
#include "hodgefil/derham.hpp"
#include "hodgefil/error.hpp"
#include "hodgefil/forms.hpp"
#include "hodgefil/hodge.hpp"
#include "hodgefil/serialize.hpp"

namespace hodgefil {

struct RunConfig {
  std::int64_t level = 0;
  std::int64_t prime = 3;
  /// Working precision; fixtures are truncated to it and must reach it.
  std::optional<Exponent> precision;
  /// Congruence window length; defaults to N - 7.
  std::optional<std::int64_t> n_N;
  std::string data_dir = HODGEFIL_DATA_DIR;
  std::optional<std::string> basis_override;
  std::optional<std::string> out;
  DenominatorPolicy policy = DenominatorPolicy::Strict;
  bool full = false;
};

/// Throws InvalidArgument unless the level is an odd prime and p is a prime
/// different from the level.
void validate_config(const RunConfig& config);

/// <data_dir>/<level>_w<weight>_<sign>.json
std::filesystem::path fixture_path(const std::string& data_dir, std::int64_t level,
                                   int weight, const std::string& sign);

std::int64_t effective_n_N(const RunConfig& config);

/// Ingested, echelonized and validated inputs plus the de Rham basis.
struct BasisStage {
  FormBasis w2;
  FormBasis w12;
  DimensionReport dims;
  DeRhamData data;
  std::string change_of_basis_source;
};

BasisStage run_basis(const RunConfig& config);

struct HodgeStage {
  HeckeResult hecke;
  EndoMatrix z;
  std::string z_antisymmetry;  // empty when Z^T = -Z
  HodgeResult result;
};

HodgeStage run_hodge(const RunConfig& config, const BasisStage& basis);

CongruenceReport run_congruence(const RunConfig& config, const BasisStage& basis);

Json cmd_basis(const RunConfig& config);
Json cmd_hodge(const RunConfig& config);
Json cmd_congruence(const RunConfig& config);

/// 2 usage, 3 data error, 4 math-pipeline error.
int exit_code(const Error& e);
Json error_json(const Error& e);

}  // namespace hodgefil
