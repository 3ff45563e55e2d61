// Copyright 2026 The symlp Authors
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

#include "symlp/rational.h"

#include <cctype>
#include <stdexcept>

#include "symlp/error.h"

namespace symlp {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Parses an optionally signed run of decimal digits.
mpz_class ParseInteger(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!AllDigits(digits)) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  mpz_class value(std::string(digits), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through the
  // decimal string to stay portable.
  value_ = mpq_class(mpz_class(std::to_string(value), 10));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator), 10),
                     mpz_class(std::to_string(denominator), 10));
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = ParseInteger(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!AllDigits(den_text)) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' ||
                              int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    if (digits.empty()) digits = "0";
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    if (negative) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }
  return Rational(mpq_class(ParseInteger(text, text)));
}

std::string Rational::ToString() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::string Rational::ToFractionString() const {
  return numerator() + "/" + denominator();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

}  // namespace symlp
