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

// hodgefil: Hodge filtration data and mod-N congruence coranks for X_0^+(N).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hodgefil/pipeline.hpp"

int main(int argc, char** argv) {
  using namespace hodgefil;
  CLI::App app{"Hodge filtration data for X_0^+(N) from q-expansions of modular forms"};
  app.require_subcommand(1, 1);

  RunConfig config;
  bool lenient = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--level", config.level, "prime level N")->required();
    sub->add_option("--prime", config.prime, "auxiliary prime p for T_p (default 3)");
    sub->add_option("--precision", config.precision,
                    "working precision P: fixtures are truncated to O(q^P)");
    sub->add_option("--nn", config.n_N, "congruence window length n_N (default N - 7)");
    sub->add_option("--data-dir", config.data_dir, "fixture directory");
    sub->add_option("--basis-override", config.basis_override,
                    "JSON 2g x 2g change-of-basis matrix (symplectic = M * raw)");
    sub->add_flag("--lenient-denominators", lenient,
                  "skip congruence rows whose window has an N-divisible denominator");
    sub->add_option("--out", config.out, "write the JSON report here instead of stdout");
    sub->add_flag("--full", config.full, "print series to full internal precision");
  };
  auto* basis = app.add_subcommand("basis", "symplectic de Rham basis");
  auto* hodge = app.add_subcommand("hodge", "T_p, Z, gauge transform and beta/gamma_Fil");
  auto* congruence = app.add_subcommand("congruence", "mod-N corank analysis");
  for (auto* sub : {basis, hodge, congruence}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  config.policy = lenient ? DenominatorPolicy::Lenient : DenominatorPolicy::Strict;

  try {
    Json report;
    if (basis->parsed()) {
      report = cmd_basis(config);
    } else if (hodge->parsed()) {
      report = cmd_hodge(config);
    } else {
      report = cmd_congruence(config);
    }
    const std::string text = report.dump(2) + "\n";
    if (config.out) {
      std::ofstream out(*config.out, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << *config.out << "\n";
        return 3;
      }
      out << text;
    } else {
      std::cout << text;
    }
    if (congruence->parsed()) std::cerr << report["summary"].get<std::string>() << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << error_json(e).dump(2) << "\n";
    return exit_code(e);
  }
}
