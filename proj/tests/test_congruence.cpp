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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace hodgefil;
using hodgefil::test::q;
using hodgefil::test::series;
using hodgefil::test::starts_with;

namespace {

FormBasis fixture(std::int64_t level, int weight, const std::string& sign) {
  return ingest_basis(fixture_path(HODGEFIL_DATA_DIR, level, weight, sign));
}

std::size_t corank(const std::vector<LaurentSeries>& rows, std::uint32_t n, std::int64_t len,
                   Exponent w) {
  RowSet set{"rows", rows};
  return corank_mod_N({&set}, n, len, w, DenominatorPolicy::Strict).corank;
}

/// Replaces the forms by an integer unimodular mix (upper unitriangular with
/// random entries, then a random row permutation).
FormBasis unimodular_mix(FormBasis b, std::mt19937_64& rng) {
  const std::size_t n = b.forms.size();
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<LaurentSeries> out;
  for (std::size_t i = 0; i < n; ++i) {
    LaurentSeries f = b.forms[i];
    for (std::size_t j = i + 1; j < n; ++j) f = f + Rational(coef(rng)) * b.forms[j];
    out.push_back(f);
  }
  std::shuffle(out.begin(), out.end(), rng);
  b.forms = std::move(out);
  return b;
}

}  // namespace

TEST_CASE("corank_mod_N: toy rows") {
  CHECK(corank({LaurentSeries::zero()}, 67, 10, 0) == 1);
  auto f = series(0, {"1", "2", "3"}, 20);
  CHECK(corank({f, f}, 67, 10, 0) >= 1);
  CHECK(corank({f, f}, 67, 10, 0) == 1);
  // Independent over Q but equal modulo 7.
  auto g = series(0, {"1", "9", "3"}, 20);
  CHECK(corank({f, g}, 67, 10, 0) == 0);
  CHECK(corank({f, g}, 7, 10, 0) == 1);
  // Only the window matters: rows differing outside it are dependent.
  auto h = series(0, {"1", "2", "3", "5"}, 20);
  CHECK(corank({f, h}, 67, 3, 0) == 1);
  CHECK(corank({f, h}, 67, 4, 0) == 0);
}

TEST_CASE("corank_mod_N: denominator policy") {
  auto good = series(0, {"1", "1/2"}, 10);
  auto bad = series(0, {"1", "1/67"}, 10);
  RowSet set{"A1", {good, bad}};
  try {
    (void)corank_mod_N({&set}, 67, 5, 0, DenominatorPolicy::Strict);
    FAIL("expected BadDenominator");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::BadDenominator);
  }
  auto lenient = corank_mod_N({&set}, 67, 5, 0, DenominatorPolicy::Lenient);
  REQUIRE(lenient.skipped.size() == 1);
  CHECK(lenient.skipped[0].set == "A1");
  CHECK(lenient.skipped[0].index == 1);
  CHECK(lenient.rows_used == 1);
  CHECK(lenient.corank == 0);
  // A bad denominator outside the window is harmless.
  auto late = series(0, {"1", "0", "0", "0", "0", "0", "1/67"}, 10);
  CHECK(corank({late}, 67, 5, 0) == 0);
}

TEST_CASE("window_start") {
  RowSet a{"a", {series(-3, {"1"}, 5), series(2, {"1"}, 5)}};
  RowSet b{"b", {LaurentSeries::zero(), series(-1, {"4"}, 5)}};
  CHECK(window_start({&a, &b}) == -3);
  RowSet z{"z", {LaurentSeries::zero()}};
  CHECK(window_start({&z}) == 0);
}

TEST_CASE("build_A1: N = 67") {
  const auto& stage = hodgefil::test::basis_stage(67, true);
  auto a1 = build_A1(stage.data);
  CHECK(a1.size() == 16);
  // (int omega_0) omega_0 = (q - q^3 - ...)(1 - 3q^2 - ...) = q - 4q^3 + ...
  CHECK(starts_with(a1[0], 1, {"1", "0", "-4"}));
  for (std::size_t i = 0; i < 4; ++i) CHECK(residue(a1[5 * i]) == 0);
}

TEST_CASE("congruence_report: N = 67 and N = 97") {
  struct Case {
    std::int64_t level;
    std::int64_t n;
    std::size_t c2, c3;
    std::int64_t diff;
  };
  for (const Case& c : {Case{67, 60, 3, 2, 1}, Case{97, 90, 11, 9, 2}}) {
    CAPTURE(c.level);
    for (bool paper : {true, false}) {
      const auto& stage = hodgefil::test::basis_stage(c.level, paper);
      auto r = congruence_report(stage.data, fixture(c.level, 2, "full"),
                                 fixture(c.level, 2, "plus"), c.n);
      CHECK(r.rows_A1 == 4 * stage.data.genus * stage.data.genus);
      CHECK(r.rows_A3 == stage.data.genus);
      CHECK(r.corank_A1A2 == c.c2);
      CHECK(r.corank_A1A3 == c.c3);
      CHECK(r.difference == c.diff);
      CHECK(r.skipped_rows.empty());
      CHECK(summary_line(r) == "corank(A1∪A2)=" + std::to_string(c.c2) + " corank(A1∪A3)=" +
                                   std::to_string(c.c3) + " diff=" + std::to_string(c.diff));
    }
  }
}

TEST_CASE("congruence_report: A2 = A3 gives difference 0") {
  const auto& stage = hodgefil::test::basis_stage(67, true);
  FormBasis plus = fixture(67, 2, "plus");
  auto r = congruence_report(stage.data, plus, plus, 60);
  CHECK(r.difference == 0);
  CHECK(r.corank_A1A2 == r.corank_A1A3);
}

TEST_CASE("congruence_report: invariant under unimodular changes of basis") {
  std::mt19937_64 rng(2024);
  for (std::int64_t level : {67, 97}) {
    const auto& stage = hodgefil::test::basis_stage(level, true);
    FormBasis full = fixture(level, 2, "full");
    FormBasis plus = fixture(level, 2, "plus");
    const std::int64_t n = level - 7;
    auto base = congruence_report(stage.data, full, plus, n);
    for (int trial = 0; trial < 3; ++trial) {
      auto r = congruence_report(stage.data, unimodular_mix(full, rng),
                                 unimodular_mix(plus, rng), n);
      CHECK(r.corank_A1A2 == base.corank_A1A2);
      CHECK(r.corank_A1A3 == base.corank_A1A3);
      CHECK(r.difference == base.difference);
    }
  }
}

TEST_CASE("congruence: shifting the window by one moves each corank by at most 1") {
  for (std::int64_t level : {67, 97}) {
    const auto& stage = hodgefil::test::basis_stage(level, true);
    const std::int64_t n = level - 7;
    auto base = congruence_report(stage.data, fixture(level, 2, "full"),
                                  fixture(level, 2, "plus"), n);
    RowSet a1{"A1", build_A1(stage.data)};
    RowSet a3{"A3", {}};
    for (std::size_t i = 0; i < stage.data.genus; ++i)
      a3.rows.push_back(stage.data.symplectic_basis[i].series);
    const Exponent w = window_start({&a1, &a3});
    CHECK(w == base.window_start);
    auto at = [&](Exponent start) {
      return corank_mod_N({&a1, &a3}, static_cast<std::uint32_t>(level), n, start,
                          DenominatorPolicy::Strict)
          .corank;
    };
    const auto c0 = at(w);
    CHECK(c0 == base.corank_A1A3);
    for (Exponent s : {w - 1, w + 1}) {
      const auto c = at(s);
      CHECK((c + 1 >= c0 && c <= c0 + 1));
    }
  }
}

TEST_CASE("congruence_report: N = 193 (not printed in the paper)") {
  const auto& stage = hodgefil::test::basis_stage(193, false);
  auto r = congruence_report(stage.data, fixture(193, 2, "full"), fixture(193, 2, "plus"),
                             193 - 7);
  CHECK(r.rows_A1 == 4 * 7 * 7);
  CHECK(r.difference >= 0);
  MESSAGE(summary_line(r));
}
