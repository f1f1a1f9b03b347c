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

#ifndef SUCCESSION_RISING_HPP_
#define SUCCESSION_RISING_HPP_

#include "succession/rational.hpp"

namespace succession {

// Above this many factors a rising-factorial product that cannot be
// telescoped is refused with ResourceLimitExceeded.
inline constexpr unsigned long kMaxDirectFactors = 200000;

// x(x+1)...(x+count-1); equals 1 for count == 0.
Rational rising(const Rational& x, const BigInt& count);

// rising(x, count) / rising(y, count), exactly.
//
// When y - x is an integer the ratio telescopes to a product with |y - x|
// factors, independent of count, which is what makes counts in the 1e18 range
// tractable. Otherwise the two products are formed directly.
Rational rising_ratio(const Rational& x, const Rational& y, const BigInt& count);

// Probability of one particular ordered binary sequence with `ones` ones and
// `zeros` zeros when theta ~ beta(alpha, beta): B(alpha+ones, beta+zeros) / B(alpha, beta).
Rational beta_sequence_marginal(const Rational& alpha, const Rational& beta, const BigInt& ones,
                                const BigInt& zeros);

}  // namespace succession

#endif  // SUCCESSION_RISING_HPP_
