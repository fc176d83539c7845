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

#include <cstdint>
#include <span>
#include <vector>

#include "fermat/exponent.hpp"

namespace fermat {

/// One infinitesimal addend coeff * t^exp, i.e. coeff * dt[1/exp].
struct Term {
  double coeff = 0.0;
  /// Potential exponent, 0 < exp <= 1.
  Exponent exp;

  Exponent order() const { return exp.reciprocal(); }

  friend bool operator==(const Term&, const Term&) = default;
};

/// A Fermat real in canonical (decomposed) form:
///
///     x = std + sum_i coeff_i * t^(exp_i)
///
/// with exp_1 < exp_2 < ... <= 1 and every coeff_i != 0. The representation is
/// unique, so structural equality is equality of Fermat reals. Values are
/// immutable once built.
///
/// Coefficients are binary64 and are compared exactly; a term disappears only
/// when its coefficient is exactly 0.0.
class FermatReal {
 public:
  FermatReal() = default;
  FermatReal(double r);  // NOLINT(google-explicit-constructor)

  /// Builds the canonical form of std + sum coeff * t^exp. Terms with
  /// exp > 1 vanish, exp == 0 folds into the standard part, equal exponents
  /// merge, zero coefficients are dropped. Throws NonPositiveOrder on a
  /// negative exponent.
  static FermatReal canonicalize(double std_part, std::vector<Term> raw);

  /// The infinitesimal of the given order: t^(1/order). Zero when order < 1.
  static FermatReal dt(const Exponent& order);

  double standard_part() const noexcept { return std_; }
  std::span<const Term> terms() const noexcept { return terms_; }

  bool is_standard() const noexcept { return terms_.empty(); }
  bool is_zero() const noexcept { return std_ == 0.0 && terms_.empty(); }
  bool is_infinitesimal() const noexcept { return std_ == 0.0; }

  /// x - st(x).
  FermatReal infinitesimal_part() const;

  FermatReal& operator+=(const FermatReal& o);
  FermatReal& operator-=(const FermatReal& o);
  FermatReal& operator*=(const FermatReal& o);

  friend FermatReal operator+(FermatReal a, const FermatReal& b) { return a += b; }
  friend FermatReal operator-(FermatReal a, const FermatReal& b) { return a -= b; }
  friend FermatReal operator*(const FermatReal& a, const FermatReal& b);
  friend FermatReal operator-(const FermatReal& a);

  friend bool operator==(const FermatReal&, const FermatReal&) = default;

 private:
  double std_ = 0.0;
  std::vector<Term> terms_;
};

FermatReal dt(const Exponent& order);

/// x^n by repeated multiplication; x^0 == 1.
FermatReal pow_nat(const FermatReal& x, std::uint64_t n);

/// 1/x via the finite geometric series in h = x - st(x). Throws NotInvertible
/// when st(x) == 0.
FermatReal invert(const FermatReal& x);

/// Keeps the standard part and the terms of order strictly greater than k.
/// iota(x, 0) == x and iota(x, inf) == st(x).
FermatReal iota(const FermatReal& x, const OrderBound& k);

/// Equality up to k-th order infinitesimals: iota(x, k) == iota(y, k).
bool eq_up_to(const FermatReal& x, const FermatReal& y, const OrderBound& k);

inline double standard_part(const FermatReal& x) noexcept { return x.standard_part(); }

}  // namespace fermat
