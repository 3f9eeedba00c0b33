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

#include "xeq/rational.h"

#include <cmath>
#include <string>

#include "xeq/error.h"

namespace xeq {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational Fraction(const mpz_class& num, const mpz_class& den) {
  XEQ_REQUIRE(den != 0, "zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw InputError("zero denominator in \"" + std::string(text) + "\"");
  }
  if (!text.empty() && text.front() == '-') n = -n;
  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string ToString(const Rational& value) { return value.get_str(10); }

Rational Sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  XEQ_REQUIRE(a.size() == b.size(), "dot product of mismatched lengths");
  Rational total = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (sgn(a[k]) != 0 && sgn(b[k]) != 0) total += a[k] * b[k];
  }
  return total;
}

bool IsProbabilityVector(std::span<const Rational> values) {
  for (const Rational& v : values) {
    if (sgn(v) < 0) return false;
  }
  return Sum(values) == 1;
}

Rational Rationalize(double value, std::int64_t max_denominator) {
  XEQ_REQUIRE(std::isfinite(value), "cannot rationalize a non-finite value");
  XEQ_REQUIRE(max_denominator >= 1, "max_denominator must be positive");
  const Rational target(value);  // exact binary value of the double
  // Continued fraction expansion of the exact target.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = target;
  Rational best(mpz_class(0));
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const mpz_class p2 = a * p1 + p0;
    const mpz_class q2 = a * q1 + q0;
    if (q2 > max_denominator) {
      // Best semiconvergent that still fits.
      const mpz_class k = (mpz_class(max_denominator) - q0) / q1;
      const Rational semi = Fraction(k * p1 + p0, k * q1 + q0);
      const Rational conv = Fraction(p1, q1);
      best = abs(semi - target) < abs(conv - target) ? semi : conv;
      break;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Rational frac = rest - Rational(a);
    if (frac == 0) {
      best = Fraction(p1, q1);
      break;
    }
    rest = 1 / frac;
  }
  best.canonicalize();
  return best;
}

std::vector<double> ToDoubles(std::span<const Rational> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(v.get_d());
  return out;
}

}  // namespace xeq
