/* Copyright 2026 The Succession Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "succession/rising.hpp"

#include <string>

#include "succession/errors.hpp"

namespace succession {

namespace {

unsigned long checked_factor_count(const BigInt& count) {
  if (count > kMaxDirectFactors) {
    throw ResourceLimitExceeded("rising-factorial product with " + count.get_str() +
                                " factors exceeds the direct-evaluation cap");
  }
  return count.get_ui();
}

// Number of factors rising_ratio would multiply out.
BigInt ratio_cost(const Rational& x, const Rational& y, const BigInt& count) {
  if (count == 0) return 0;
  const Rational shift = y - x;
  if (shift.is_integer()) {
    BigInt m = abs(shift.numerator());
    return m < count ? m : count;
  }
  return count;
}

}  // namespace

Rational rising(const Rational& x, const BigInt& count) {
  if (count < 0) throw std::invalid_argument("rising factorial with negative count");
  const unsigned long n = checked_factor_count(count);
  // Accumulate numerator and denominator separately; one gcd at the end.
  BigInt num = 1;
  BigInt den = 1;
  const BigInt xn = x.numerator();
  const BigInt xd = x.denominator();
  for (unsigned long i = 0; i < n; ++i) {
    num *= xn + xd * i;
    den *= xd;
  }
  return Rational(num, den);
}

Rational rising_ratio(const Rational& x, const Rational& y, const BigInt& count) {
  if (count < 0) throw std::invalid_argument("rising factorial with negative count");
  if (count == 0) return 1;
  const Rational shift = y - x;
  if (shift.is_integer()) {
    const BigInt m = abs(shift.numerator());
    if (m < count) {
      // rising(x, a) / rising(x + m, a) == rising(x, m) / rising(x + a, m)
      if (shift.sign() >= 0) return rising(x, m) / rising(x + count, m);
      return rising(y + count, m) / rising(y, m);
    }
  }
  return rising(x, count) / rising(y, count);
}

Rational beta_sequence_marginal(const Rational& alpha, const Rational& beta, const BigInt& ones,
                                const BigInt& zeros) {
  const Rational total = alpha + beta;
  // rising(a+b, ones+zeros) splits either as zeros-then-ones or ones-then-zeros;
  // pick whichever telescopes better.
  const BigInt cost_zeros_first =
      ratio_cost(beta, total, zeros) + ratio_cost(alpha, total + zeros, ones);
  const BigInt cost_ones_first =
      ratio_cost(alpha, total, ones) + ratio_cost(beta, total + ones, zeros);
  if (cost_zeros_first <= cost_ones_first) {
    return rising_ratio(beta, total, zeros) * rising_ratio(alpha, total + zeros, ones);
  }
  return rising_ratio(alpha, total, ones) * rising_ratio(beta, total + ones, zeros);
}

}  // namespace succession
