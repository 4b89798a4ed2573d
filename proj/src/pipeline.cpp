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

#include "hodgefil/pipeline.hpp"

#include "hodgefil/correspondence.hpp"

namespace hodgefil {

namespace {

constexpr const char* kModule = "cli";

std::optional<Exponent> display_terms(const RunConfig& config) {
  if (config.full) return std::nullopt;
  return 10;
}

FormBasis load(const RunConfig& config, int weight, const std::string& sign) {
  return ingest_basis(fixture_path(config.data_dir, config.level, weight, sign));
}

void check_level(const FormBasis& b, const RunConfig& config, int weight, const std::string& src) {
  if (b.level != config.level || b.weight != weight) {
    throw Error(ErrorKind::SchemaError, kModule, "load_fixture",
                src + ": expected level " + std::to_string(config.level) + " weight " +
                    std::to_string(weight) + ", file declares level " +
                    std::to_string(b.level) + " weight " + std::to_string(b.weight));
  }
}

FormBasis prepare(const RunConfig& config, FormBasis b, Exponent required, const std::string& src) {
  check_precision(b, required, src);
  if (config.precision) b = truncate_basis(b, *config.precision);
  return echelonize(b);
}

std::filesystem::path resolve_override(const RunConfig& config, const std::string& path) {
  std::filesystem::path p(path);
  if (std::filesystem::exists(p)) return p;
  std::filesystem::path in_data = std::filesystem::path(config.data_dir) / p;
  if (std::filesystem::exists(in_data)) return in_data;
  throw Error(ErrorKind::FixtureNotFound, kModule, "basis_override",
              "expected change-of-basis matrix at " + p.string() + " or " + in_data.string());
}

Json differentials_json(const std::vector<Differential>& basis, std::optional<Exponent> terms) {
  Json out = Json::array();
  for (const auto& mu : basis) {
    Json e;
    e["label"] = mu.label;
    e["dq_coefficient"] = to_json(mu.series, terms);
    out.push_back(std::move(e));
  }
  return out;
}

Json series_list(const std::vector<LaurentSeries>& v, std::optional<Exponent> terms) {
  Json out = Json::array();
  for (const auto& f : v) out.push_back(to_json(f, terms));
  return out;
}

Json header(const char* command, const RunConfig& config) {
  Json out;
  out["command"] = command;
  out["level"] = config.level;
  return out;
}

void add_basis_summary(Json& out, const BasisStage& b) {
  out["genus"] = b.dims.g;
  out["weight12_dimension"] = b.dims.d;
  out["precision"] = b.w12.precision;
  out["j_dR"] = b.data.j_dr;
  out["change_of_basis_source"] = b.change_of_basis_source;
}

}  // namespace

void validate_config(const RunConfig& config) {
  if (config.level < 3 || !is_prime(config.level)) {
    throw Error(ErrorKind::InvalidArgument, kModule, "validate_config",
                "level " + std::to_string(config.level) + " is not an odd prime");
  }
  if (config.prime < 2 || !is_prime(config.prime)) {
    throw Error(ErrorKind::InvalidArgument, kModule, "validate_config",
                "p = " + std::to_string(config.prime) + " is not prime");
  }
  if (config.prime == config.level) {
    throw Error(ErrorKind::InvalidArgument, kModule, "validate_config",
                "p must differ from the level N = " + std::to_string(config.level));
  }
  if (config.n_N && *config.n_N <= 0) {
    throw Error(ErrorKind::InvalidArgument, kModule, "validate_config",
                "--nn must be positive");
  }
  if (config.precision && *config.precision <= (config.level + 1) / 2) {
    throw Error(ErrorKind::InvalidArgument, kModule, "validate_config",
                "--precision must exceed (N+1)/2 = " + std::to_string((config.level + 1) / 2));
  }
}

std::filesystem::path fixture_path(const std::string& data_dir, std::int64_t level,
                                   int weight, const std::string& sign) {
  return std::filesystem::path(data_dir) /
         (std::to_string(level) + "_w" + std::to_string(weight) + "_" + sign + ".json");
}

std::int64_t effective_n_N(const RunConfig& config) {
  return config.n_N.value_or(config.level - 7);
}

BasisStage run_basis(const RunConfig& config) {
  validate_config(config);
  BasisStage s;
  const auto w2_path = fixture_path(config.data_dir, config.level, 2, "plus");
  const auto w12_path = fixture_path(config.data_dir, config.level, 12, "plus");
  FormBasis w2 = load(config, 2, "plus");
  FormBasis w12 = load(config, 12, "plus");
  check_level(w2, config, 2, w2_path.string());
  check_level(w12, config, 12, w12_path.string());
  const Exponent required =
      config.precision.value_or(required_precision(config.level, config.prime, w2.size(),
                                                   w12.size(), effective_n_N(config)));
  s.w2 = prepare(config, std::move(w2), required, w2_path.string());
  s.w12 = prepare(config, std::move(w12), required, w12_path.string());
  s.dims = validate_dimensions(s.w2, s.w12);
  const std::int64_t j = select_jdr(s.w2, s.w12);
  DeRhamData raw = build_raw_basis(s.w2, s.w12, j);
  if (config.basis_override) {
    auto path = resolve_override(config, *config.basis_override);
    s.data = symplectic_complete(raw, read_matrix_json(path.string()));
    s.change_of_basis_source = "override:" + path.filename().string();
  } else {
    s.data = symplectic_complete(raw);
    s.change_of_basis_source = "default";
  }
  return s;
}

HodgeStage run_hodge(const RunConfig& config, const BasisStage& basis) {
  HodgeStage h;
  h.hecke = hecke_matrix(basis.data, config.prime, config.level);
  h.z = nice_correspondence(h.hecke.tp);
  h.z_antisymmetry = antisymmetry_diagnostic(h.z.entries);
  GaugeSolution gauge = solve_gauge(basis.data, h.z.entries);
  const std::string failure = verify_gauge(gauge, basis.data, h.z.entries);
  if (!failure.empty()) {
    throw Error(ErrorKind::InconsistentSystem, "hodge", "solve_gauge", failure);
  }
  h.result = solve_hodge(gauge, basis.data, basis.w12, basis.data.j_dr);
  h.result.tp = h.hecke.tp;
  h.result.z = h.z;
  return h;
}

CongruenceReport run_congruence(const RunConfig& config, const BasisStage& basis) {
  const auto path = fixture_path(config.data_dir, config.level, 2, "full");
  FormBasis full = ingest_basis(path);
  check_level(full, config, 2, path.string());
  const Exponent required = config.precision.value_or(required_precision(
      config.level, config.prime, basis.w2.size(), basis.w12.size(), effective_n_N(config)));
  full = prepare(config, std::move(full), required, path.string());
  return congruence_report(basis.data, full, basis.w2, effective_n_N(config), config.policy);
}

Json cmd_basis(const RunConfig& config) {
  BasisStage b = run_basis(config);
  const auto terms = display_terms(config);
  Json out = header("basis", config);
  add_basis_summary(out, b);
  out["f_dR"] = to_json(b.data.f_dr, terms);
  out["raw_basis"] = differentials_json(b.data.raw_basis, terms);
  out["raw_cup_matrix"] = to_json(b.data.raw_cup_matrix);
  out["raw_cup_determinant"] = to_json(determinant(b.data.raw_cup_matrix));
  out["change_of_basis"] = to_json(b.data.change_of_basis);
  out["symplectic_basis"] = differentials_json(b.data.symplectic_basis, terms);
  out["cup_matrix"] = to_json(b.data.cup_matrix);
  return out;
}

Json cmd_hodge(const RunConfig& config) {
  BasisStage b = run_basis(config);
  HodgeStage h = run_hodge(config, b);
  const HodgeResult& r = h.result;
  const auto terms = display_terms(config);
  const std::size_t g = b.data.genus;

  Json out = header("hodge", config);
  out["prime"] = config.prime;
  add_basis_summary(out, b);
  out["f_dR"] = to_json(b.data.f_dr, terms);
  out["change_of_basis"] = to_json(b.data.change_of_basis);
  out["M"] = to_json(h.hecke.m);
  out["T_p"] = to_json(h.hecke.tp.entries);
  out["Z"] = to_json(h.z.entries);
  out["Z_antisymmetric"] = h.z_antisymmetry.empty();
  if (!h.z_antisymmetry.empty()) out["Z_antisymmetry_violation"] = h.z_antisymmetry;

  Json lambda = Json::array();
  SeriesMatrix lm = build_lambda(b.data, h.z.entries);
  for (std::size_t i = 0; i < lm.size(); ++i)
    for (std::size_t j = 0; j < lm[i].size(); ++j)
      if (!lm[i][j].is_zero()) {
        Json e;
        e["row"] = i;
        e["col"] = j;
        e["dq_coefficient"] = to_json(lm[i][j], terms);
        lambda.push_back(std::move(e));
      }
  out["lambda_nonzero_entries"] = std::move(lambda);

  Json gauge;
  gauge["a"] = series_list(r.gauge.a, terms);
  gauge["b"] = series_list(r.gauge.b, terms);
  gauge["c"] = to_json(r.gauge.c, terms);
  gauge["verified"] = true;
  out["psi_alpha_beta"] = std::move(gauge);

  out["c_minus_B2T_A2"] = to_json(r.pole_target, terms);
  out["pole_order_A2"] = r.max_pole_order;
  out["pole_bound"] = r.pole_bound;
  Json system;
  system["equations"] = r.equations;
  system["unknowns"] = r.unknowns;
  system["residual_principal_part"] = "0";
  out["linear_system"] = std::move(system);

  out["alpha_fil"] = to_json(std::vector<Rational>(2 * g, Rational(0)));
  out["b_fil"] = to_json(r.b_fil);
  out["beta_fil"] = to_json(r.beta_fil);
  Json gamma;
  Json span = Json::array();
  for (auto k : r.gamma_fil_indices) {
    span.push_back("s_" + std::to_string(k) + "/s_" + std::to_string(b.dims.d));
  }
  gamma["span"] = std::move(span);
  gamma["coefficients"] = to_json(r.gamma_fil_coeffs);
  gamma["series"] = to_json(r.gamma_fil_series, terms);
  out["gamma_fil"] = std::move(gamma);
  out["regular_part"] = to_json(r.regular_part, terms);
  return out;
}

Json cmd_congruence(const RunConfig& config) {
  BasisStage b = run_basis(config);
  CongruenceReport r = run_congruence(config, b);
  Json out = header("congruence", config);
  out["change_of_basis_source"] = b.change_of_basis_source;
  out["n_N"] = r.n_N;
  out["window"] = Json::array({r.window_start, r.window_start + r.n_N - 1});
  Json rows;
  rows["A1"] = r.rows_A1;
  rows["A2"] = r.rows_A2;
  rows["A3"] = r.rows_A3;
  out["rows"] = std::move(rows);
  out["corank_A1A2"] = r.corank_A1A2;
  out["corank_A1A3"] = r.corank_A1A3;
  out["difference"] = r.difference;
  Json skipped = Json::array();
  for (const auto& s : r.skipped_rows) {
    Json e;
    e["set"] = s.set;
    e["index"] = s.index;
    e["reason"] = s.reason;
    skipped.push_back(std::move(e));
  }
  out["skipped_rows"] = std::move(skipped);
  out["summary"] = summary_line(r);
  // Published corank values exist only for (N, n_N) = (67, 60) and (97, 90);
  // anything else is new output and is labelled as such.
  struct Published {
    std::int64_t level, n_N;
    std::size_t c2, c3;
  };
  static constexpr Published kPublished[] = {{67, 60, 3, 2}, {97, 90, 11, 9}};
  out["published_value"] = nullptr;
  out["label"] = "new output (no published value)";
  for (const auto& p : kPublished) {
    if (p.level == config.level && p.n_N == r.n_N) {
      Json pub;
      pub["corank_A1A2"] = p.c2;
      pub["corank_A1A3"] = p.c3;
      out["published_value"] = std::move(pub);
      out["label"] = (p.c2 == r.corank_A1A2 && p.c3 == r.corank_A1A3) ? "matches published value"
                                                                       : "DIFFERS from published value";
    }
  }
  return out;
}

int exit_code(const Error& e) {
  if (e.kind() == ErrorKind::InvalidArgument) return 2;
  if (is_data_error(e.kind())) return 3;
  return 4;
}

Json error_json(const Error& e) {
  Json out;
  Json err;
  err["kind"] = std::string(to_string(e.kind()));
  err["module"] = e.module();
  err["operation"] = e.operation();
  err["datum"] = e.datum();
  err["message"] = e.what();
  out["error"] = std::move(err);
  return out;
}

}  // namespace hodgefil
