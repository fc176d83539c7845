// Copyright 2026 The Fermat Reals Authors
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

#include "fermat/exponent.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Exponent::Integer parse_integer(std::string_view digits) {
  return Exponent::Integer(std::string(digits));
}

}  // namespace

Exponent::Exponent(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = den < 0 ? Rational(-Integer(num), -Integer(den)) : Rational(num, den);
}

Exponent::Exponent(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = den < 0 ? Rational(-num, -den) : Rational(num, den);
}

Exponent Exponent::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    r = Rational(parse_integer(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = whole.empty() ? Integer(0) : parse_integer(whole);
    Integer f = frac.empty() ? Integer(0) : parse_integer(frac);
    r = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(text)) throw std::invalid_argument("malformed integer: " + std::string(text));
    r = Rational(parse_integer(text));
  }
  if (negative) r = -r;
  return Exponent(std::move(r));
}

Exponent::Integer Exponent::floor() const {
  Integer n = numerator();
  Integer d = denominator();
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Exponent::Integer Exponent::ceil() const {
  Integer f = floor();
  return f * denominator() == numerator() ? f : f + 1;
}

Exponent Exponent::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero exponent");
  return Exponent(Rational(1) / value_);
}

double Exponent::to_double() const { return value_.convert_to<double>(); }

std::string Exponent::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Exponent& Exponent::operator/=(const Exponent& o) {
  if (o.is_zero()) throw std::domain_error("division by zero exponent");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << e.to_string(); }

OrderBound::OrderBound(Exponent value) : value_(std::move(value)) {
  if (value_.sign() < 0) throw DomainError("order bound must be >= 0");
}

const Exponent& OrderBound::value() const {
  if (infinite_) throw std::logic_error("OrderBound::value on infinity");
  return value_;
}

OrderBound OrderBound::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return OrderBound(Exponent::parse(text));
}

std::string OrderBound::to_string() const { return infinite_ ? "inf" : value_.to_string(); }

}  // namespace fermat
