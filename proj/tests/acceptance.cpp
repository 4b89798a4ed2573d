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

// Acceptance driver: prints one PASS/FAIL line per criterion (1-7), with
// indented detail lines for every failed check, and exits nonzero if any
// criterion fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace hodgefil;
using hodgefil::test::matrix;
using hodgefil::test::q;
using hodgefil::test::starts_with;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  /// Runs `body`, turning any pipeline error into a failed check.
  void run(const std::function<void(Criterion&)>& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
  }

  void note(const std::string& text) { notes_.push_back(text); }

  bool report() const {
    const bool ok = failures_.empty();
    std::cout << "criterion " << id_ << ": " << (ok ? "PASS" : "FAIL") << " — " << title_ << " ("
              << (checks_ - failures_.size()) << "/" << checks_ << " checks)\n";
    for (const auto& f : failures_) std::cout << "    failed: " << f << "\n";
    for (const auto& n : notes_) std::cout << "    note: " << n << "\n";
    return ok;
  }

 private:
  int id_;
  std::string title_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::vector<Rational> rationals(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(q(s));
  return out;
}

std::vector<std::string> negated(const std::vector<std::string>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(to_string(-q(s)));
  return out;
}

FormBasis fixture(std::int64_t level, int weight, const std::string& sign) {
  return ingest_basis(fixture_path(HODGEFIL_DATA_DIR, level, weight, sign));
}

// ---------------------------------------------------------------- N = 67 --

const Matrix kRaw67 = matrix({{"0", "0", "-1", "-1"},
                              {"0", "0", "-1/2", "0"},
                              {"1", "1/2", "0", "-33"},
                              {"1", "0", "33", "0"}});
const Matrix kM67 = matrix({{"0", "0", "3", "-1"},
                            {"0", "0", "1", "0"},
                            {"-3", "-1", "0", "263"},
                            {"1", "0", "-263", "0"}});
const Matrix kT67 = matrix({{"3", "1", "0", "-263"},
                            {"-1", "0", "263", "0"},
                            {"0", "0", "3", "-1"},
                            {"0", "0", "1", "0"}});
const Matrix kZ67 = matrix({{"0", "1052", "6", "4"},
                            {"-1052", "0", "-4", "-6"},
                            {"-6", "4", "0", "0"},
                            {"-4", "6", "0", "0"}});

// --------------------------------------------------------------- N = 193 --

const std::vector<std::vector<std::string>> kRaw193 = {
    {"0", "0", "0", "0", "0", "0", "0", "-79753/8", "-48393/8", "-3961", "-2001", "-2003", "43", "-1"},
    {"0", "0", "0", "0", "0", "0", "0", "-73423/24", "-16469/8", "-6133/6", "-3065/3", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-15583/12", "-2639/4", "-3917/6", "89/6", "43/3", "-1/3", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-5909/12", "-2013/4", "34/3", "34/3", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-47917/120", "53/40", "257/30", "-1/30", "-1/5", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "49/8", "-1/56", "-1/7", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "-1/9", "0", "0", "0", "0", "0", "0"},
    {"79753/8", "73423/24", "15583/12", "5909/12", "47917/120", "-49/8", "1/9", "0", "-70103211175/84", "-15086097454/21", "-24213252503/60", "-3856217914/9", "1301390974/45", "3928216/9"},
    {"48393/8", "16469/8", "2639/4", "2013/4", "-53/40", "1/56", "0", "70103211175/84", "0", "-583720821/7", "-7976234419/60", "303227023/42", "2879807041/210", "16160411/14"},
    {"3961", "6133/6", "3917/6", "-34/3", "-257/30", "1/7", "0", "15086097454/21", "583720821/7", "0", "17263481/30", "128613395/42", "2008835527/210", "8685898/7"},
    {"2001", "3065/3", "-89/6", "-34/3", "1/30", "0", "0", "24213252503/60", "7976234419/60", "-17263481/30", "0", "-2743136/15", "121447697/30", "-764545/6"},
    {"2003", "0", "-43/3", "0", "1/5", "0", "0", "3856217914/9", "-303227023/42", "-128613395/42", "2743136/15", "0", "60737216/15", "-376507/3"},
    {"-43", "0", "1/3", "0", "0", "0", "0", "-1301390974/45", "-2879807041/210", "-2008835527/210", "-121447697/30", "-60737216/15", "0", "2077/3"},
    {"1", "0", "0", "0", "0", "0", "0", "-3928216/9", "-16160411/14", "-8685898/7", "764545/6", "376507/3", "-2077/3", "0"},};

const std::vector<std::string> kFdr193 = {"1",    "1",    "-42",  "-41",   "1963",  "1922",
                                          "3841", "5806", "9690", "11488", "284925"};

// Top-right 7x7 block of the printed Z, and printed top-left entries.
const std::vector<std::vector<long>> kZ193TopRight = {
    {14, 0, 14, 0, 0, 0, 0},      {-84, -56, -42, -28, -14, 0, 0},
    {42, 0, 14, 0, 0, 0, 14},     {364, 168, 168, 70, 84, 42, 14},
    {0, 56, -14, 28, 14, 0, -14}, {-406, -126, -196, -42, -84, -56, -28},
    {378, 182, 182, 70, 98, 56, 0}};
struct Entry {
  std::size_t i, j;
  const char* value;
};
const std::vector<Entry> kZ193TopLeft = {
    {1, 0, "-9540337662156/1433291"},
    {0, 1, "9540337662156/1433291"},
    {0, 2, "4335054124247763/2866582"},
    {0, 3, "6401000762099027/25799238"},
    {0, 4, "-13110192931669897/8599746"},
    {0, 5, "-267727903087391908/12899619"},
    {0, 6, "-3048788107254906597/2866582"},
    {1, 2, "-11601405007652425/25799238"},
    {1, 6, "6397851759663749133/5733164"},
    {2, 3, "56474481585050101769/51598476"},
    {5, 6, "14066222820396411352429/51598476"}};

const std::vector<std::string> kBFil193 = {
    "1764687596/12899619", "2465679139/38698857", "2461515581/77397714", "1249246271/77397714",
    "-35867104/38698857",  "0",                   "0"};
const std::vector<std::string> kGammaCoeffs193 = {"148022444521/36977815632258",
                                                  "75730523315027/16434584725448"};
const std::vector<std::string> kGammaSeries193 = {
    "-148022444521/36977815632258",      "-148022444521/36977815632258",
    "-218902313051905/49303754176344",   "-657299028933799/147911262529032",
    "-657299028933799/73955631264516",   "-1971304997023313/147911262529032",
    "-365034551679203/16434584725448",   "-1972193131690439/73955631264516",
    "-46569944151137785/73955631264516", "-1972489176579481/36977815632258",
    "-5916875439960359/73955631264516",  "-5041266187752739/49303754176344",
    "-20387519602731365/147911262529032"};

// ------------------------------------------------------------- criteria --

void criterion1(Criterion& c) {
  const auto& b = hodgefil::test::basis_stage(67, true);
  const auto& h = hodgefil::test::hodge_stage(67, true);
  const HodgeResult& r = h.result;
  c.check(starts_with(b.data.f_dr, -3, {"1", "1", "3", "70", "9"}) && b.data.f_dr.valuation() == -3,
          "f_dR = q^-3 + q^-2 + 3q^-1 + 70 + 9q + O(q^2)");
  c.check(b.data.raw_cup_matrix == kRaw67, "raw cup matrix");
  c.check(h.hecke.m == kM67, "M");
  c.check(h.hecke.tp.entries == kT67, "T_3");
  c.check(h.z.entries == kZ67, "Z");
  c.check(starts_with(r.pole_target, -1, {"8", "-3"}), "c - B2^T A2 = 8q^-1 - 3 + O(q)");
  c.check(r.beta_fil == rationals({"0", "0", "-8", "0"}), "beta_Fil = (0, 0, -8, 0)");
  c.check(r.gamma_fil_coeffs.empty() && r.gamma_fil_series.is_zero(), "gamma_Fil = 0");
}

void criterion2(Criterion& c) {
  const auto& b = hodgefil::test::basis_stage(97, false);
  c.check(b.data.j_dr == 1, "j_dR = 1");
  c.check(starts_with(b.data.f_dr, -4, {"1", "1", "3", "4", "73"}) && b.data.f_dr.valuation() == -4,
          "f_dR = q^-4 + q^-3 + 3q^-2 + 4q^-1 + 73 + O(q)");
  c.check(b.dims.d == 46, "d = 46");
  c.check(b.dims.g == 3 && (97 + 1) / 2 == b.dims.d + b.dims.g, "(97+1)/2 = 46 + 3");
}

void criterion3(Criterion& c) {
  const auto& b = hodgefil::test::basis_stage(193, true);
  const auto& h = hodgefil::test::hodge_stage(193, true);
  const HodgeResult& r = h.result;
  c.check(b.data.j_dr == 3, "j_dR = 3");
  c.check(starts_with(b.data.f_dr, -10, kFdr193) && b.data.f_dr.valuation() == -10,
          "f_dR through the 11 printed terms");

  std::size_t cup_bad = 0;
  for (std::size_t i = 0; i < 14; ++i)
    for (std::size_t j = 0; j < 14; ++j)
      if (b.data.raw_cup_matrix(i, j) != q(kRaw193[i][j])) ++cup_bad;
  c.check(cup_bad == 0, "raw cup matrix, all 196 printed entries (" + std::to_string(cup_bad) +
                            " differ)");
  c.check(b.data.raw_cup_matrix(7, 8) == q("-70103211175/84"), "cup entry -70103211175/84");

  const Matrix& z = h.z.entries;
  std::size_t z_equal = 0, z_negated = 0, z_total = 0;
  auto tally = [&](const Rational& ours, const Rational& printed) {
    if (sgn(printed) == 0) {
      c.check(sgn(ours) == 0, "Z: printed zero entry is zero");
      return;
    }
    ++z_total;
    if (ours == printed) ++z_equal;
    if (ours == -printed) ++z_negated;
  };
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      tally(z(i, 7 + j), Rational(kZ193TopRight[i][j]));
      tally(z(7 + j, i), -Rational(kZ193TopRight[i][j]));
    }
  for (const auto& e : kZ193TopLeft) tally(z(e.i, e.j), q(e.value));
  c.check(z_equal == z_total, "Z: " + std::to_string(z_equal) + " of " + std::to_string(z_total) +
                                  " nonzero printed entries equal (" + std::to_string(z_negated) +
                                  " equal the negated printed value; Z[0][7] = " +
                                  to_string(z(0, 7)) + ", printed 14)");

  c.check(r.b_fil == rationals(kBFil193),
          "b_Fil (computed b_Fil " +
              std::string(r.b_fil == rationals(negated(kBFil193)) ? "is exactly the negated"
                                                                  : "differs from the") +
              " printed vector)");
  c.check(r.gamma_fil_indices == std::vector<std::int64_t>{88, 89}, "gamma_Fil span s88/s90, s89/s90");
  c.check(r.gamma_fil_coeffs == rationals(kGammaCoeffs193), "gamma_Fil span coefficients");
  c.check(starts_with(r.gamma_fil_series, -8, kGammaSeries193),
          "gamma_Fil series q^-8 .. q^4 (computed series " +
              std::string(starts_with(r.gamma_fil_series, -8, negated(kGammaSeries193))
                              ? "is exactly the negated"
                              : "differs from the") +
              " printed one)");

  // Diagnosis: rerun the filtration step with the printed Z (= -Z).
  const Matrix printed_z = Rational(-1) * z;
  GaugeSolution gauge = solve_gauge(b.data, printed_z);
  HodgeResult alt = solve_hodge(gauge, b.data, b.w12, 3);
  std::ostringstream diag;
  diag << "with the printed Z (exactly -Z) the filtration step gives: b_Fil "
       << (alt.b_fil == rationals(kBFil193) ? "= printed" : "!= printed") << ", gamma_Fil series "
       << (starts_with(alt.gamma_fil_series, -8, kGammaSeries193) ? "= printed" : "!= printed")
       << ", gamma_Fil coefficients "
       << (alt.gamma_fil_coeffs == rationals(negated(kGammaCoeffs193)) ? "= -printed"
                                                                         : "!= -printed")
       << "; the printed gamma_Fil coefficients and printed gamma_Fil series differ by a sign, so "
          "no single convention reproduces every printed N = 193 value";
  c.note(diag.str());
}

void criterion4(Criterion& c) {
  struct Case {
    std::int64_t level, n;
    std::size_t c2, c3;
    std::int64_t diff;
  };
  for (const Case& k : {Case{67, 60, 3, 2, 1}, Case{97, 90, 11, 9, 2}}) {
    const auto& b = hodgefil::test::basis_stage(k.level, false);
    auto r = congruence_report(b.data, fixture(k.level, 2, "full"), fixture(k.level, 2, "plus"), k.n);
    const std::string tag = "N = " + std::to_string(k.level) + ", n_N = " + std::to_string(k.n);
    c.check(r.corank_A1A2 == k.c2, tag + ": corank(A1 u A2) = " + std::to_string(r.corank_A1A2));
    c.check(r.corank_A1A3 == k.c3, tag + ": corank(A1 u A3) = " + std::to_string(r.corank_A1A3));
    c.check(r.difference == k.diff, tag + ": difference = " + std::to_string(r.difference));
  }
}

void criterion5(Criterion& c) {
  const auto e67 = eta_product_12(67, 40);
  c.check(e67 == hodgefil::test::series(34, {"1", "-12", "54", "-88", "-99", "540"}, 40),
          "eta_product_12(67) = printed s32");
  const auto e193 = eta_product_12(193, 105);
  c.check(e193 ==
              hodgefil::test::series(97, {"1", "-12", "54", "-88", "-99", "540", "-418", "-648"}, 105),
          "eta_product_12(193) = printed s90");
  for (std::int64_t level : {67, 193}) {
    FormBasis w12 = echelonize(fixture(level, 12, "plus"));
    const LaurentSeries& last = w12.forms.back();
    c.check(last == eta_product_12(level, w12.precision),
            "N = " + std::to_string(level) + ": last echelon form of the fixture = eta product");
  }
}

void criterion6(Criterion& c) {
  hodgefil::test::SeriesGen gen(20260101);
  std::size_t anti = 0, bilinear = 0, roundtrip = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Differential a{gen.residue_free(-4, 2, 40), "a"};
    Differential b{gen.residue_free(-4, 2, 40), "b"};
    Differential e{gen.residue_free(-4, 2, 40), "e"};
    const Rational x = gen.coefficient(), y = gen.coefficient();
    if (cup(a, b) == -cup(b, a)) ++anti;
    Differential mix{x * a.series + y * b.series, "mix"};
    if (cup(mix, e) == x * cup(a, e) + y * cup(b, e) &&
        cup(e, mix) == x * cup(e, a) + y * cup(e, b))
      ++bilinear;
    LaurentSeries f = gen.residue_free(-6, 6, 30);
    if (derivative(antiderivative(f)) == f) ++roundtrip;
  }
  c.check(anti == 100, "cup antisymmetry on 100 random pairs (" + std::to_string(anti) + ")");
  c.check(bilinear == 100, "cup bilinearity on 100 random triples (" + std::to_string(bilinear) + ")");
  c.check(roundtrip == 100,
          "derivative(antiderivative(f)) = f on 100 random series (" + std::to_string(roundtrip) + ")");

  for (std::int64_t level : {67, 97, 193}) {
    const std::string tag = "N = " + std::to_string(level);
    const auto& b = hodgefil::test::basis_stage(level, false);
    c.check(b.change_of_basis_source == "default", tag + ": default symplectic completion used");
    c.check(cup_matrix(b.data.symplectic_basis) == Matrix::symplectic(b.data.genus),
            tag + ": default symplectic basis re-verified to C");
    for (bool paper : {false, true}) {
      const std::string t = tag + (paper ? " (paper basis)" : " (default basis)");
      const auto& bs = hodgefil::test::basis_stage(level, paper);
      const auto& h = hodgefil::test::hodge_stage(level, paper);
      const HodgeResult& r = h.result;
      c.check(verify_gauge(r.gauge, bs.data, h.z.entries).empty(), t + ": gauge identities");
      c.check(r.max_pole_order <= static_cast<std::int64_t>(bs.data.genus) + r.j_dr - 1,
              t + ": pole bound M <= g + j_dR - 1");
      // Independent recomputation of the pole-free combination.
      const std::size_t g = bs.data.genus;
      LaurentSeries combo = r.gauge.c + r.gamma_fil_series;
      for (std::size_t k = g; k < 2 * g; ++k) combo = combo - r.gauge.b[k] * r.gauge.a[k];
      for (std::size_t i = 0; i < g; ++i) combo = combo - r.b_fil[i] * r.gauge.a[g + i];
      bool principal_zero = combo.precision() > -1;
      for (Exponent e = combo.valuation(); e < 0 && principal_zero; ++e)
        if (sgn(combo.stored(e)) != 0) principal_zero = false;
      c.check(principal_zero && r.equations >= r.unknowns,
              t + ": overdetermined system residual identically zero");
    }
  }
}

void criterion7(Criterion& c) {
  std::vector<std::pair<std::string, std::function<Json()>>> runs;
  for (std::int64_t level : {67, 97, 193}) {
    RunConfig cfg = hodgefil::test::config_for(level, level != 97);
    cfg.full = true;
    runs.emplace_back("basis " + std::to_string(level), [cfg] { return cmd_basis(cfg); });
    runs.emplace_back("hodge " + std::to_string(level), [cfg] { return cmd_hodge(cfg); });
    runs.emplace_back("congruence " + std::to_string(level), [cfg] { return cmd_congruence(cfg); });
  }
  for (const auto& [name, fn] : runs) {
    const std::string first = fn().dump(2);
    const std::string second = fn().dump(2);
    c.check(!first.empty() && first == second, name + ": byte-identical reports");
  }
}

}  // namespace

int main(int argc, char** argv) {
  // --expect-fail k (repeatable) marks criterion k as a known, analysed
  // failure: the exit status is 0 only if exactly the expected criteria
  // fail. The PASS/FAIL lines are printed unchanged either way.
  std::vector<int> expected;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) != "--expect-fail") {
      std::cerr << "usage: acceptance [--expect-fail k]...\n";
      return 2;
    }
    expected.push_back(std::stoi(argv[i + 1]));
  }
  if (argc % 2 == 0) {
    std::cerr << "usage: acceptance [--expect-fail k]...\n";
    return 2;
  }
  std::vector<std::pair<std::string, void (*)(Criterion&)>> criteria = {
      {"N = 67 paper basis: f_dR, cup matrix, M, T_3, Z, c - B2^T A2, beta_Fil, gamma_Fil",
       criterion1},
      {"N = 97: j_dR, f_dR, dimensions", criterion2},
      {"N = 193 paper basis: j_dR, f_dR, cup matrix, Z, b_Fil, gamma_Fil", criterion3},
      {"congruence coranks for N = 67 and N = 97", criterion4},
      {"eta-product oracle for N = 67 and N = 193", criterion5},
      {"property suites", criterion6},
      {"determinism", criterion7}};
  bool as_expected = true;
  int id = 1;
  for (const auto& [title, fn] : criteria) {
    const int k = id++;
    Criterion c(k, title);
    c.run(fn);
    const bool passed = c.report();
    const bool expect_fail = std::find(expected.begin(), expected.end(), k) != expected.end();
    if (expect_fail) {
      std::cout << "    " << (passed ? "UNEXPECTED PASS" : "expected failure") << "\n";
    }
    if (passed == expect_fail) as_expected = false;
    std::cout.flush();
  }
  return as_expected ? 0 : 1;
}
