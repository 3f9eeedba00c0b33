// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XEQ_RATIONAL_H_
#define XEQ_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xeq {

// Arbitrary precision rational, always kept in canonical form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// num/den in canonical form; den must be nonzero.
Rational Fraction(const mpz_class& num, const mpz_class& den);

// Parses "p/q", "p", "-p/q". Surrounding whitespace is not allowed.
// Throws InputError on anything else or a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical text form: "p/q", or "p" when the denominator is one.
std::string ToString(const Rational& value);

Rational Sum(std::span<const Rational> values);
Rational Dot(std::span<const Rational> a, std::span<const Rational> b);

// True iff all entries are nonnegative and they sum to exactly one.
bool IsProbabilityVector(std::span<const Rational> values);

// Closest fraction to `value` with denominator at most `max_denominator`
// (continued-fraction convergents and semiconvergents). Exact for doubles
// that are already such fractions up to rounding.
Rational Rationalize(double value, std::int64_t max_denominator);

std::vector<double> ToDoubles(std::span<const Rational> values);

}  // namespace xeq

#endif  // XEQ_RATIONAL_H_
