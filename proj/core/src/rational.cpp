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

#include "succession/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace succession {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const BigInt num = parse_bigint(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    }
    const BigInt den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_bigint(text));

  std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && whole.front() == '-') {
    negative = true;
    whole.remove_prefix(1);
  }
  if (!all_digits(frac) || (!whole.empty() && !all_digits(whole))) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  BigInt num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
  if (negative) num = -num;
  return Rational(num, scale);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const BigInt num = abs(value_.get_num());
  const BigInt den = value_.get_den();

  BigInt scaled = num * scale;
  BigInt quotient;
  BigInt remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(BigInt(2 * remainder), den);
  if (half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t()))) ++quotient;

  std::string body = quotient.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = (sign() < 0 && quotient != 0) ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out += '.';
    out += body.substr(body.size() - digits);
  }
  return out;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, unsigned long exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace succession
