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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/fermat_real.hpp"

namespace fermat {

/// A smooth real function from the built-in catalog, together with a
/// closed-form rule for its derivative tower.
///
/// The tower is exposed as normalized Taylor coefficients f^(i)(x) / i!,
/// which is what the extension to Fermat reals consumes. Rules per function:
///
///   exp       e^x / i!
///   ln        (-1)^(i-1) / (i x^i)
///   sin, cos  period-4 cycle of +-sin, +-cos, divided by i!
///   tan       P_i(tan x) with P_0(T) = T, P_(i+1) = (1 + T^2) P_i' / (i + 1)
///   atan      cos^i(th) sin(i (th + pi/2)) / i,  th = atan x
///   sqrt      binom(1/2, i) sqrt(x) / x^i
///   recip     (-1)^i / x^(i+1)
///   pow_const binom(c, i) x^(c - i)
class ElementaryFn {
 public:
  enum class Kind { Exp, Ln, Sin, Cos, Tan, Atan, Sqrt, Recip, PowConst };

  static ElementaryFn exp() { return ElementaryFn(Kind::Exp); }
  static ElementaryFn ln() { return ElementaryFn(Kind::Ln); }
  static ElementaryFn sin() { return ElementaryFn(Kind::Sin); }
  static ElementaryFn cos() { return ElementaryFn(Kind::Cos); }
  static ElementaryFn tan() { return ElementaryFn(Kind::Tan); }
  static ElementaryFn atan() { return ElementaryFn(Kind::Atan); }
  static ElementaryFn sqrt() { return ElementaryFn(Kind::Sqrt); }
  static ElementaryFn recip() { return ElementaryFn(Kind::Recip); }
  static ElementaryFn pow_const(double c) { return ElementaryFn(Kind::PowConst, c); }

  /// Looks up one of the unary catalog names: exp ln sin cos tan atan sqrt
  /// recip.
  static std::optional<ElementaryFn> by_name(std::string_view name);

  /// Every catalog function; pow_const is represented with c = 5/2.
  static std::array<ElementaryFn, 9> catalog();

  Kind kind() const noexcept { return kind_; }
  /// Exponent of pow_const; 0 for the other kinds.
  double power() const noexcept { return power_; }
  std::string name() const;

  bool in_domain(double x) const;
  /// Human-readable domain requirement, used in DomainError messages.
  std::string_view domain_description() const;

  double value(double x) const;

  /// f^(i)(x) / i! for i = 0..n. Requires in_domain(x).
  std::vector<double> taylor_coefficients(double x, std::size_t n) const;

  /// f^(i)(x).
  double derivative(double x, std::size_t i) const;

 private:
  explicit ElementaryFn(Kind kind, double power = 0.0) : kind_(kind), power_(power) {}

  Kind kind_;
  double power_;
};

/// Extension of f to Fermat reals: f(st x) + sum_(i=1..N) f^(i)(st x)/i! h^i
/// with h = x - st(x) and N = floor(order(h)), beyond which h^i vanishes.
/// Throws DomainError when st(x) is outside f's domain.
FermatReal ext_apply(const ElementaryFn& f, const FermatReal& x);

}  // namespace fermat
