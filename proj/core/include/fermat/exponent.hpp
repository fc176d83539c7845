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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fermat {

/// Exact rational number used for potential exponents a in (0, 1] and for
/// orders 1/a in [1, inf).
///
/// Always held in lowest terms with a positive denominator. Arithmetic and
/// comparison never round.
class Exponent {
 public:
  using Integer = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  Exponent() = default;
  Exponent(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Exponent(std::int64_t num, std::int64_t den);
  Exponent(const Integer& num, const Integer& den);
  explicit Exponent(Rational value) : value_(std::move(value)) {}

  /// Parses "p", "p/q", or a plain decimal such as "2.1" (converted exactly to
  /// 21/10). Throws std::invalid_argument on malformed text or q == 0.
  static Exponent parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }
  const Rational& rational() const noexcept { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Largest integer <= value.
  Integer floor() const;
  /// Smallest integer >= value.
  Integer ceil() const;

  Exponent reciprocal() const;
  double to_double() const;

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const;

  Exponent& operator+=(const Exponent& o) { value_ += o.value_; return *this; }
  Exponent& operator-=(const Exponent& o) { value_ -= o.value_; return *this; }
  Exponent& operator*=(const Exponent& o) { value_ *= o.value_; return *this; }
  Exponent& operator/=(const Exponent& o);

  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
  friend Exponent operator*(Exponent a, const Exponent& b) { return a *= b; }
  friend Exponent operator/(Exponent a, const Exponent& b) { return a /= b; }
  friend Exponent operator-(const Exponent& a) { return Exponent(Rational(-a.value_)); }

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Exponent& e);

 private:
  Rational value_{0};
};

/// Subscript of an ideal D_a or truncation level of iota_k: a non-negative
/// rational or infinity.
class OrderBound {
 public:
  OrderBound(Exponent value);  // NOLINT(google-explicit-constructor)
  OrderBound(std::int64_t value) : OrderBound(Exponent(value)) {}  // NOLINT

  static OrderBound infinity() { return OrderBound(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Requires !is_infinite().
  const Exponent& value() const;

  /// Parses a rational/decimal or one of "inf", "infinity", "oo".
  static OrderBound parse(std::string_view text);
  std::string to_string() const;

 private:
  OrderBound() : infinite_(true) {}

  Exponent value_;
  bool infinite_ = false;
};

}  // namespace fermat
