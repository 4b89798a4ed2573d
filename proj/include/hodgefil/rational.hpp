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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hodgefil {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw parts go through
// make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "-a" or "a/b" with decimal integers. Returns nullopt on any
/// other input (including a zero denominator).
std::optional<Rational> parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& x);

/// Image of x in F_p. Returns nullopt when p divides the denominator.
std::optional<std::uint32_t> reduce_mod(const Rational& x, std::uint32_t p);

bool is_prime(std::int64_t n);

}  // namespace hodgefil
