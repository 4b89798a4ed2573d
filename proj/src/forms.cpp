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

#include "hodgefil/forms.hpp"

#include <fstream>
#include <sstream>

#include "hodgefil/error.hpp"

namespace hodgefil {

namespace {

constexpr const char* kModule = "formsio";

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& source, const std::string& what) {
  throw Error(ErrorKind::SchemaError, kModule, "ingest_basis", source + ": " + what);
}

const json& require_field(const json& obj, const char* key, const std::string& source,
                          const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(source, where + "missing field \"" + key + "\"");
  return *it;
}

std::int64_t require_integer(const json& obj, const char* key, const std::string& source,
                             const std::string& where = "") {
  const json& v = require_field(obj, key, source, where);
  if (!v.is_number_integer()) {
    schema_error(source, where + "field \"" + key + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

}  // namespace

std::string to_string(AtkinLehner sign) {
  switch (sign) {
    case AtkinLehner::Plus: return "+";
    case AtkinLehner::Minus: return "-";
    case AtkinLehner::Full: return "full";
  }
  return "?";
}

FormBasis parse_basis(const json& doc, const std::string& source) {
  if (!doc.is_object()) schema_error(source, "top level must be an object");
  FormBasis basis;
  basis.level = require_integer(doc, "level", source);
  std::int64_t weight = require_integer(doc, "weight", source);
  if (weight <= 0 || weight > 1000) schema_error(source, "weight out of range");
  basis.weight = static_cast<int>(weight);
  basis.precision = require_integer(doc, "precision", source);

  const json& al = require_field(doc, "atkin_lehner", source, "");
  if (!al.is_string()) schema_error(source, "field \"atkin_lehner\" must be a string");
  const auto s = al.get<std::string>();
  if (s == "+" || s == "plus") {
    basis.sign = AtkinLehner::Plus;
  } else if (s == "-" || s == "minus") {
    basis.sign = AtkinLehner::Minus;
  } else if (s == "full") {
    basis.sign = AtkinLehner::Full;
  } else {
    schema_error(source, "atkin_lehner must be \"+\", \"-\" or \"full\", got \"" + s + "\"");
  }

  const json& forms = require_field(doc, "forms", source, "");
  if (!forms.is_array()) schema_error(source, "field \"forms\" must be an array");
  if (forms.empty()) schema_error(source, "form list is empty");

  for (std::size_t i = 0; i < forms.size(); ++i) {
    const std::string where = "forms[" + std::to_string(i) + "]: ";
    const json& f = forms[i];
    if (!f.is_object()) schema_error(source, where + "must be an object");
    const Exponent v = require_integer(f, "valuation", source, where);
    if (v < 1) schema_error(source, where + "cusp forms need valuation >= 1");
    if (v >= basis.precision) {
      schema_error(source, where + "valuation is not below the declared precision");
    }
    const json& cs = require_field(f, "coefficients", source, where);
    if (!cs.is_array()) schema_error(source, where + "coefficients must be an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      std::optional<Rational> x;
      if (cs[k].is_string()) {
        x = parse_rational(cs[k].get<std::string>());
      } else if (cs[k].is_number_integer()) {
        x = Rational(Integer(std::to_string(cs[k].get<std::int64_t>())));
      }
      if (!x) {
        throw Error(ErrorKind::ParseError, kModule, "ingest_basis",
                    source + ": " + where + "coefficient " + std::to_string(k) +
                        " (q^" + std::to_string(v + static_cast<Exponent>(k)) +
                        ") is not an exact fraction: " + cs[k].dump());
      }
      coeffs.push_back(std::move(*x));
    }
    basis.forms.emplace_back(v, std::move(coeffs), basis.precision);
    if (basis.forms.back().is_zero()) schema_error(source, where + "form is zero");
  }
  return basis;
}

FormBasis ingest_basis(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::FixtureNotFound, kModule, "ingest_basis",
                "expected fixture at " + path.string());
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, kModule, "ingest_basis",
                path.string() + ": " + e.what());
  }
  return parse_basis(doc, path.string());
}

Exponent required_precision(std::int64_t level, std::int64_t p, std::size_t g,
                            std::size_t d, std::int64_t n_N) {
  const auto j_max = static_cast<std::int64_t>(d) - 1;
  return (level + 1) / 2 + p * (static_cast<std::int64_t>(g) + j_max + 3) + n_N;
}

void check_precision(const FormBasis& basis, Exponent required,
                     const std::string& source) {
  if (basis.precision < required) {
    throw Error(ErrorKind::PrecisionTooLow, kModule, "ingest_basis",
                source + ": fixture known to O(q^" + std::to_string(basis.precision) +
                    "), pipeline requires O(q^" + std::to_string(required) + ")");
  }
}

FormBasis truncate_basis(const FormBasis& basis, Exponent precision) {
  if (precision >= basis.precision) return basis;
  FormBasis out = basis;
  out.precision = precision;
  for (auto& f : out.forms) f = f.truncated(precision);
  return out;
}

FormBasis echelonize(const FormBasis& basis) {
  const std::size_t n = basis.forms.size();
  FormBasis out = basis;
  out.forms.clear();
  if (n == 0) return out;

  Exponent lo = basis.precision;
  for (const auto& f : basis.forms) lo = std::min(lo, f.valuation());
  const Exponent hi = basis.precision;
  const auto width = static_cast<std::size_t>(std::max<Exponent>(0, hi - lo));

  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(width));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = basis.forms[i];
    for (Exponent e = f.valuation(); e < std::min(f.end(), hi); ++e) {
      rows[i][static_cast<std::size_t>(e - lo)] = f.stored(e);
    }
  }

  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < n; ++c) {
    std::size_t p = r;
    while (p < n && sgn(rows[p][c]) == 0) ++p;
    if (p == n) continue;
    std::swap(rows[p], rows[r]);
    if (rows[r][c] != 1) {
      Rational inv = 1 / rows[r][c];
      for (std::size_t j = c; j < width; ++j) {
        if (sgn(rows[r][j]) != 0) rows[r][j] *= inv;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < width; ++j) {
        if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    ++r;
  }
  if (r < n) {
    throw Error(ErrorKind::DependentForms, kModule, "echelonize",
                "rank " + std::to_string(r) + " of " + std::to_string(n) +
                    " forms at precision O(q^" + std::to_string(hi) + ")");
  }
  for (auto& row : rows) out.forms.emplace_back(lo, std::move(row), hi);
  return out;
}

LaurentSeries eta_product_12(std::int64_t level, Exponent precision) {
  const Exponent v = (level + 1) / 2;
  const Exponent n = precision - v;
  if (n <= 0) return LaurentSeries::zero(precision);

  // Euler's pentagonal theorem: prod (1 - q^m) = sum_k (-1)^k q^{k(3k-1)/2}.
  std::vector<Rational> euler(static_cast<std::size_t>(n));
  for (Exponent k = 0; k * (3 * k - 1) / 2 < n; ++k) {
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    euler[static_cast<std::size_t>(k * (3 * k - 1) / 2)] = sign;
    const Exponent e = k * (3 * k + 1) / 2;
    if (k > 0 && e < n) euler[static_cast<std::size_t>(e)] = sign;
  }
  LaurentSeries e1(0, std::move(euler), n);
  LaurentSeries e2 = e1 * e1;
  LaurentSeries e4 = e2 * e2;
  LaurentSeries e12 = (e4 * e4) * e4;

  std::vector<Rational> dilated(static_cast<std::size_t>(n));
  for (Exponent k = 0; k * level < n; ++k) {
    dilated[static_cast<std::size_t>(k * level)] = e12.stored(k);
  }
  LaurentSeries f12(0, std::move(dilated), n);
  return (e12 * f12).shifted(v);
}

DimensionReport validate_dimensions(const FormBasis& w2, const FormBasis& w12) {
  if (w2.level != w12.level) {
    throw Error(ErrorKind::DimensionMismatch, kModule, "validate_dimensions",
                "weight-2 basis has level " + std::to_string(w2.level) +
                    ", weight-12 basis has level " + std::to_string(w12.level));
  }
  DimensionReport report;
  report.level = w2.level;
  report.g = w2.size();
  report.d = w12.size();
  report.half_level_plus_one = (w2.level + 1) / 2;
  if (static_cast<std::int64_t>(report.g + report.d) != report.half_level_plus_one) {
    std::ostringstream os;
    os << "(N+1)/2 = " << report.half_level_plus_one << " but d + g = " << report.d
       << " + " << report.g << " = " << report.d + report.g;
    throw Error(ErrorKind::DimensionMismatch, kModule, "validate_dimensions", os.str());
  }
  const LaurentSeries& last = w12.forms.back();
  LaurentSeries eta = eta_product_12(w12.level, last.precision());
  for (Exponent e = std::min(last.valuation(), eta.valuation()); e < last.precision(); ++e) {
    if (last.stored(e) != eta.stored(e)) {
      throw Error(ErrorKind::EtaMismatch, kModule, "validate_dimensions",
                  "last weight-12 form differs from eta(z)^12 eta(Nz)^12 at q^" +
                      std::to_string(e) + ": " + to_string(last.stored(e)) + " vs " +
                      to_string(eta.stored(e)));
    }
  }
  return report;
}

}  // namespace hodgefil
