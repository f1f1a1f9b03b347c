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

#ifndef SUCCESSION_RATIONAL_HPP_
#define SUCCESSION_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace succession {

// Unbounded signed integer. Counts of instances (n can be 2e18 and beyond)
// are carried in this type throughout the library.
using BigInt = mpz_class;

// Parses a base-10 integer string ("123", "-7"). Throws std::invalid_argument
// on anything else, including empty strings, whitespace and a leading '+'.
BigInt parse_bigint(std::string_view text);

// Exact rational number, always held in canonical form: the denominator is
// positive and shares no factor with the numerator.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "p", "p/q" and finite decimals such as "0.25" or "-3.5". All are
  // read exactly; there is no floating-point path.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return BigInt(value_.get_num()); }
  BigInt denominator() const { return BigInt(value_.get_den()); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  // "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  // Decimal expansion with exactly `digits` fractional digits, rounded to
  // nearest with ties to even.
  std::string to_decimal(unsigned digits) const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpq_class value_;
};

Rational abs(const Rational& x);

// x^e for a nonnegative machine exponent.
Rational pow(const Rational& x, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace succession

#endif  // SUCCESSION_RATIONAL_HPP_
