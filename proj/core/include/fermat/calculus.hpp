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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "fermat/elementary.hpp"
#include "fermat/expr.hpp"
#include "fermat/fermat_real.hpp"

namespace fermat {

/// Slope m of f at the standard point x, read off f(x + dt) = f(x) + m * dt.
///
/// `var` names the variable of f; every other free variable must be bound in
/// `env`. Throws NotSmoothAtPoint when the increment is not a single
/// first-order term (e.g. f contains dt literals) or evaluation fails.
double derive(const Expr& f, std::string_view var, double x, const Env& env = {});
double derive(const ElementaryFn& f, double x);

/// Returns d^|j| f / dx^j evaluated at a standard point.
using PartialsOracle =
    std::function<double(std::span<const std::uint64_t> multi_index, std::span<const double> point)>;

/// f(x + h) = sum_(|j| <= n) h^j / j! * d^|j| f(x), exact for every h in D_n^d.
/// Monomials h^j that vanish are pruned by product_power_zero before the
/// oracle is queried. Throws NotInIdeal if some h_i is not in D_n,
/// LengthMismatch if x and h differ in length.
FermatReal taylor_multi(const PartialsOracle& partials, std::span<const double> x,
                        std::span<const FermatReal> h, std::uint64_t n);

/// x^y = exp(y * ln x), for st(x) > 0. Throws DomainError otherwise.
FermatReal pow(const FermatReal& x, const FermatReal& y);

/// ln(y) / ln(base); both need a positive standard part and st(base) != 1.
FermatReal log(const FermatReal& base, const FermatReal& y);

/// One addend a_q(x) * p^q of a non-standard smooth function.
struct ParamPolyTerm {
  std::vector<std::uint64_t> multi_index;
  Expr coefficient;
};

/// f(x) = sum_q a_q(x) * p^q: ordinary smooth coefficient expressions a_q
/// over standard variables, times monomials in infinitesimal parameters
/// p in D_k^d.
class ParamPoly {
 public:
  /// Validates that every parameter is infinitesimal and in D_k, that every
  /// multi-index has one entry per parameter and total degree <= k.
  ParamPoly(std::vector<FermatReal> params, OrderBound k, std::vector<ParamPolyTerm> terms);

  std::span<const FermatReal> params() const noexcept { return params_; }
  const OrderBound& bound() const noexcept { return bound_; }
  std::span<const ParamPolyTerm> terms() const noexcept { return terms_; }

 private:
  std::vector<FermatReal> params_;
  OrderBound bound_;
  std::vector<ParamPolyTerm> terms_;
};

/// Evaluates every coefficient under `env` (standard or Fermat values) and
/// sums it against its parameter monomial.
FermatReal eval_param_poly(const ParamPoly& p, const Env& env);

}  // namespace fermat
