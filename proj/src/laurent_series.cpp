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

#include "hodgefil/laurent_series.hpp"

#include <algorithm>
#include <sstream>

#include "hodgefil/error.hpp"

namespace hodgefil {

namespace {

constexpr const char* kModule = "exactseries";

Exponent prec_add(Exponent a, Exponent b) {
  if (a == kExact || b == kExact) return kExact;
  return a + b;
}

std::string exponent_datum(Exponent e, Exponent prec) {
  std::ostringstream os;
  os << "coefficient of q^" << e << " requested, series known modulo O(q^"
     << prec << ")";
  return os.str();
}

// Integer vector F and denominator L with coeffs[i] = F[i] / L.
struct ScaledIntegers {
  std::vector<Integer> values;
  Integer denominator = 1;
};

ScaledIntegers scale_to_integers(std::span<const Rational> coeffs) {
  ScaledIntegers out;
  for (const auto& c : coeffs) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
            c.get_den_mpz_t());
  }
  out.values.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Integer v = out.denominator / c.get_den();
    v *= c.get_num();
    out.values.push_back(std::move(v));
  }
  return out;
}

}  // namespace

LaurentSeries::LaurentSeries(Exponent valuation, std::vector<Rational> coeffs,
                             Exponent precision)
    : val_(valuation), coeffs_(std::move(coeffs)), prec_(precision) {
  normalize();
}

void LaurentSeries::normalize() {
  if (prec_ != kExact && val_ + size() > prec_) {
    coeffs_.resize(static_cast<std::size_t>(std::max<Exponent>(0, prec_ - val_)));
  }
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Rational& c) { return sgn(c) != 0; });
  val_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) val_ = 0;
}

LaurentSeries LaurentSeries::zero(Exponent precision) {
  return LaurentSeries(0, {}, precision);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, Exponent exponent,
                                      Exponent precision) {
  return LaurentSeries(exponent, {c}, precision);
}

const Rational& LaurentSeries::stored(Exponent e) const {
  static const Rational kZero(0);
  if (coeffs_.empty() || e < val_ || e >= val_ + size()) return kZero;
  return coeffs_[static_cast<std::size_t>(e - val_)];
}

Rational LaurentSeries::coefficient(Exponent e) const {
  if (e >= prec_) {
    throw Error(ErrorKind::InsufficientPrecision, kModule, "coefficient",
                exponent_datum(e, prec_));
  }
  return stored(e);
}

LaurentSeries LaurentSeries::truncated(Exponent precision) const {
  if (precision >= prec_) return *this;
  return LaurentSeries(val_, coeffs_, precision);
}

LaurentSeries LaurentSeries::shifted(Exponent k) const {
  LaurentSeries out = *this;
  if (!out.coeffs_.empty()) out.val_ += k;
  out.prec_ = prec_add(prec_, k);
  return out;
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  Exponent p = std::min(prec_, other.prec_);
  return truncated(p).coeffs_ == other.truncated(p).coeffs_ &&
         truncated(p).valuation() == other.truncated(p).valuation();
}

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g) {
  Exponent prec = std::min(f.precision(), g.precision());
  if (f.is_zero()) return g.truncated(prec);
  if (g.is_zero()) return f.truncated(prec);
  Exponent lo = std::min(f.valuation(), g.valuation());
  Exponent hi = std::min(std::max(f.end(), g.end()), prec);
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(std::max<Exponent>(0, hi - lo)));
  for (Exponent e = lo; e < hi; ++e) c.push_back(f.stored(e) + g.stored(e));
  return LaurentSeries(lo, std::move(c), prec);
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
  return add(f, g);
}

LaurentSeries operator-(const LaurentSeries& f) {
  return Rational(-1) * f;
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) {
  return add(f, -g);
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& f) {
  if (sgn(c) == 0) return LaurentSeries::zero(f.precision() == kExact ? kExact : f.precision());
  std::vector<Rational> out(f.coefficients().begin(), f.coefficients().end());
  for (auto& x : out) x *= c;
  return LaurentSeries(f.valuation(), std::move(out), f.precision());
}

LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g) {
  // The product of O(q^a) with anything nonzero is still uncertain; the
  // precision formula below handles it because valuation() == precision()
  // for zero series.
  if ((f.is_zero() && f.is_exact()) || (g.is_zero() && g.is_exact())) {
    return LaurentSeries::zero();
  }
  Exponent vf = f.valuation();
  Exponent vg = g.valuation();
  Exponent prec = std::min(prec_add(vf, g.precision()), prec_add(vg, f.precision()));
  if (f.is_zero() || g.is_zero()) return LaurentSeries::zero(prec);

  Exponent v = vf + vg;
  Exponent n = f.size() + g.size() - 1;
  if (prec != kExact) n = std::min(n, prec - v);
  if (n <= 0) return LaurentSeries::zero(prec);

  auto fs = f.coefficients().first(static_cast<std::size_t>(std::min(n, f.size())));
  auto gs = g.coefficients().first(static_cast<std::size_t>(std::min(n, g.size())));
  ScaledIntegers fi = scale_to_integers(fs);
  ScaledIntegers gi = scale_to_integers(gs);

  std::vector<Integer> acc(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < fi.values.size(); ++i) {
    if (sgn(fi.values[i]) == 0) continue;
    const std::size_t jmax =
        std::min(gi.values.size(), static_cast<std::size_t>(n) - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), fi.values[i].get_mpz_t(),
                 gi.values[j].get_mpz_t());
    }
  }
  Integer den = fi.denominator * gi.denominator;
  std::vector<Rational> c;
  c.reserve(acc.size());
  for (auto& a : acc) c.push_back(make_rational(a, den));
  return LaurentSeries(v, std::move(c), prec);
}

LaurentSeries div(const LaurentSeries& f, const LaurentSeries& g,
                  std::optional<Exponent> terms) {
  if (g.is_zero()) {
    throw Error(ErrorKind::ZeroDivisor, kModule, "div",
                "divisor has no nonzero coefficient below O(q^" +
                    std::to_string(g.precision()) + ")");
  }
  const Exponent vg = g.valuation();
  if (f.is_zero()) {
    if (f.is_exact()) return LaurentSeries::zero();
    return LaurentSeries::zero(f.precision() - vg);
  }
  const Exponent vf = f.valuation();
  const Exponent v = vf - vg;
  Exponent certified = kExact;
  if (!f.is_exact()) certified = f.precision() - vf;
  if (!g.is_exact()) certified = std::min(certified, g.precision() - vg);

  if (certified == kExact && g.size() == 1) {
    Rational inv = 1 / g.coefficients()[0];
    std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
    for (auto& x : c) x *= inv;
    LaurentSeries q(v, std::move(c));
    return terms ? q.truncated(v + *terms) : q;
  }
  Exponent n;
  if (terms) {
    if (*terms > certified) {
      throw Error(ErrorKind::InsufficientPrecision, kModule, "div",
                  std::to_string(*terms) + " quotient terms requested, " +
                      std::to_string(certified) + " certified");
    }
    n = *terms;
  } else if (certified == kExact) {
    throw Error(ErrorKind::InsufficientPrecision, kModule, "div",
                "quotient of exact series is infinite; a term count is required");
  } else {
    n = certified;
  }
  if (n <= 0) {
    throw Error(ErrorKind::InsufficientPrecision, kModule, "div",
                "quotient has no certified terms");
  }
  const auto un = static_cast<std::size_t>(n);

  ScaledIntegers fi = scale_to_integers(
      f.coefficients().first(std::min(un, f.coefficients().size())));
  ScaledIntegers gi = scale_to_integers(
      g.coefficients().first(std::min(un, g.coefficients().size())));
  std::vector<Rational> q;
  q.reserve(un);

  const Integer& lead = gi.values[0];
  if (lead == 1 || lead == -1) {
    // Integer long division: Q = F / G with a unit leading coefficient.
    std::vector<Integer> r = std::move(fi.values);
    r.resize(un);
    Integer t;
    for (std::size_t i = 0; i < un; ++i) {
      if (lead == -1) r[i] = -r[i];
      if (sgn(r[i]) != 0) {
        const std::size_t jmax = std::min(gi.values.size(), un - i);
        for (std::size_t j = 1; j < jmax; ++j) {
          mpz_submul(r[i + j].get_mpz_t(), r[i].get_mpz_t(),
                     gi.values[j].get_mpz_t());
        }
      }
    }
    // f/g = (F / Lf) / (G / Lg) = (F / G) * Lg / Lf.
    for (auto& x : r) q.push_back(make_rational(x * gi.denominator, fi.denominator));
  } else {
    std::vector<Rational> r(f.coefficients().begin(),
                            f.coefficients().begin() +
                                static_cast<std::ptrdiff_t>(std::min(un, f.coefficients().size())));
    r.resize(un);
    const auto& gc = g.coefficients();
    Rational inv = 1 / gc[0];
    for (std::size_t i = 0; i < un; ++i) {
      Rational qi = r[i] * inv;
      if (sgn(qi) != 0) {
        const std::size_t jmax = std::min(gc.size(), un - i);
        for (std::size_t j = 1; j < jmax; ++j) r[i + j] -= qi * gc[j];
      }
      q.push_back(std::move(qi));
    }
  }
  return LaurentSeries(v, std::move(q), v + n);
}

LaurentSeries derivative(const LaurentSeries& f) {
  Exponent prec = f.is_exact() ? kExact : f.precision() - 1;
  if (f.is_zero()) return LaurentSeries::zero(prec);
  std::vector<Rational> c;
  c.reserve(f.coefficients().size());
  Exponent e = f.valuation();
  for (const auto& x : f.coefficients()) c.push_back(x * Rational(e++));
  return LaurentSeries(f.valuation() - 1, std::move(c), prec);
}

LaurentSeries antiderivative(const LaurentSeries& f) {
  if (f.precision() <= -1) {
    throw Error(ErrorKind::InsufficientPrecision, kModule, "antiderivative",
                exponent_datum(-1, f.precision()));
  }
  if (sgn(f.stored(-1)) != 0) {
    throw Error(ErrorKind::ResidueObstruction, kModule, "antiderivative",
                "coefficient of q^-1 is " + to_string(f.stored(-1)));
  }
  Exponent prec = f.is_exact() ? kExact : f.precision() + 1;
  if (f.is_zero()) return LaurentSeries::zero(prec);
  std::vector<Rational> c;
  c.reserve(f.coefficients().size());
  Exponent e = f.valuation();
  for (const auto& x : f.coefficients()) {
    c.push_back(e == -1 ? Rational(0) : x / Rational(e + 1));
    ++e;
  }
  return LaurentSeries(f.valuation() + 1, std::move(c), prec);
}

Rational residue(const LaurentSeries& f) {
  if (f.precision() <= -1) {
    throw Error(ErrorKind::InsufficientPrecision, kModule, "residue",
                exponent_datum(-1, f.precision()));
  }
  return f.stored(-1);
}

Rational residue_of_product(const LaurentSeries& f, const LaurentSeries& g) {
  if (f.is_zero() && f.is_exact()) return 0;
  if (g.is_zero() && g.is_exact()) return 0;
  Exponent prec = std::min(prec_add(f.valuation(), g.precision()),
                           prec_add(g.valuation(), f.precision()));
  if (prec <= -1) {
    throw Error(ErrorKind::InsufficientPrecision, kModule, "residue_of_product",
                exponent_datum(-1, prec));
  }
  Rational sum = 0;
  if (f.is_zero() || g.is_zero()) return sum;
  for (Exponent i = f.valuation(); i < f.end(); ++i) {
    Exponent j = -1 - i;
    if (j < g.valuation()) break;
    if (j >= g.end()) continue;
    sum += f.stored(i) * g.stored(j);
  }
  return sum;
}

LaurentSeries linear_combination(std::span<const Rational> c,
                                 std::span<const LaurentSeries> f) {
  if (c.size() != f.size()) {
    throw Error(ErrorKind::InvalidArgument, kModule, "linear_combination",
                "coefficient count " + std::to_string(c.size()) +
                    " does not match series count " + std::to_string(f.size()));
  }
  LaurentSeries out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) out = out + c[i] * f[i];
  }
  return out;
}

std::vector<std::uint32_t> reduce_mod(const LaurentSeries& f, std::uint32_t p,
                                      Exponent lo, Exponent hi) {
  std::vector<std::uint32_t> out;
  if (hi < lo) return out;
  if (hi >= f.precision()) {
    throw Error(ErrorKind::InsufficientPrecision, kModule, "reduce_mod",
                exponent_datum(hi, f.precision()));
  }
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Exponent e = lo; e <= hi; ++e) {
    auto r = reduce_mod(f.stored(e), p);
    if (!r) {
      throw Error(ErrorKind::BadDenominator, kModule, "reduce_mod",
                  "coefficient of q^" + std::to_string(e) + " is " +
                      to_string(f.stored(e)) + ", denominator divisible by " +
                      std::to_string(p));
    }
    out.push_back(*r);
  }
  return out;
}

std::string to_string(const LaurentSeries& f, std::size_t max_terms) {
  std::ostringstream os;
  std::size_t printed = 0;
  bool truncated = false;
  for (Exponent e = f.valuation(); e < f.end(); ++e) {
    const Rational& c = f.stored(e);
    if (sgn(c) == 0) continue;
    if (printed == max_terms) {
      truncated = true;
      break;
    }
    Rational a = abs(c);
    if (printed == 0) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = a == 1;
    if (e == 0) {
      os << to_string(a);
    } else {
      if (!unit) os << to_string(a) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    ++printed;
  }
  if (!f.is_exact() || truncated) {
    Exponent p = f.precision();
    if (truncated) {
      os << " + ...";
    }
    if (!f.is_exact()) {
      os << (printed == 0 ? "" : " + ") << "O(q";
      if (p != 1) os << "^" << p;
      os << ")";
    }
  } else if (printed == 0) {
    os << "0";
  }
  return os.str();
}

}  // namespace hodgefil
