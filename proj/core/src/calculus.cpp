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

#include "fermat/calculus.hpp"

#include <string>

#include "fermat/errors.hpp"
#include "fermat/order.hpp"

namespace fermat {

namespace {

const Exponent kOne{1};

double slope_of_increment(const FermatReal& increment) {
  if (increment.is_zero()) return 0.0;
  if (increment.standard_part() == 0.0 && increment.terms().size() == 1 &&
      increment.terms().front().exp == kOne) {
    return increment.terms().front().coeff;
  }
  throw NotSmoothAtPoint("increment is not a first-order multiple of dt");
}

// Monomial prod h_i^j_i, or zero when the product of powers vanishes.
FermatReal monomial(std::span<const FermatReal> h, std::span<const std::uint64_t> j) {
  std::vector<Exponent> orders;
  std::vector<std::uint64_t> exps;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (j[i] == 0) continue;
    if (h[i].is_zero()) return FermatReal(0.0);
    orders.push_back(order(h[i]));
    exps.push_back(j[i]);
  }
  if (!orders.empty() && product_power_zero(orders, exps)) return FermatReal(0.0);
  FermatReal m(1.0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (j[i] != 0) m *= pow_nat(h[i], j[i]);
  }
  return m;
}

// Visits every multi-index of length d with total degree <= n.
void for_each_multi_index(std::size_t d, std::uint64_t n,
                          const std::function<void(std::span<const std::uint64_t>)>& visit) {
  std::vector<std::uint64_t> j(d, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t left) {
    if (pos == d) {
      visit(j);
      return;
    }
    for (std::uint64_t k = 0; k <= left; ++k) {
      j[pos] = k;
      rec(pos + 1, left - k);
    }
    j[pos] = 0;
  };
  rec(0, n);
}

}  // namespace

double derive(const Expr& f, std::string_view var, double x, const Env& env) {
  Env at = env;
  Env shifted = env;
  at.insert_or_assign(std::string(var), FermatReal(x));
  shifted.insert_or_assign(std::string(var), FermatReal(x) + dt(kOne));
  try {
    return slope_of_increment(eval(f, shifted) - eval(f, at));
  } catch (const DomainError& e) {
    throw NotSmoothAtPoint(e.what());
  } catch (const NotInvertible& e) {
    throw NotSmoothAtPoint(e.what());
  }
}

double derive(const ElementaryFn& f, double x) {
  try {
    return slope_of_increment(ext_apply(f, FermatReal(x) + dt(kOne)) - ext_apply(f, FermatReal(x)));
  } catch (const DomainError& e) {
    throw NotSmoothAtPoint(e.what());
  }
}

FermatReal taylor_multi(const PartialsOracle& partials, std::span<const double> x,
                        std::span<const FermatReal> h, std::uint64_t n) {
  if (x.size() != h.size()) throw LengthMismatch("point and increment differ in dimension");
  const OrderBound bound(Exponent(static_cast<std::int64_t>(n)));
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!in_D(h[i], bound)) {
      throw NotInIdeal("increment " + std::to_string(i) + " is not in D_" + std::to_string(n));
    }
  }

  FermatReal sum(0.0);
  for_each_multi_index(h.size(), n, [&](std::span<const std::uint64_t> j) {
    FermatReal m = monomial(h, j);
    if (m.is_zero()) return;
    double factorial = 1.0;
    for (auto ji : j) {
      for (std::uint64_t k = 2; k <= ji; ++k) factorial *= static_cast<double>(k);
    }
    sum += m * FermatReal(partials(j, x) / factorial);
  });
  return sum;
}

FermatReal pow(const FermatReal& x, const FermatReal& y) {
  if (!(x.standard_part() > 0.0)) {
    throw DomainError("pow: base must be positive and invertible");
  }
  return ext_apply(ElementaryFn::exp(), y * ext_apply(ElementaryFn::ln(), x));
}

FermatReal log(const FermatReal& base, const FermatReal& y) {
  if (!(base.standard_part() > 0.0) || !(y.standard_part() > 0.0)) {
    throw DomainError("log: arguments must be positive and invertible");
  }
  if (base.standard_part() == 1.0) throw DomainError("log: base must not have standard part 1");
  return ext_apply(ElementaryFn::ln(), y) * invert(ext_apply(ElementaryFn::ln(), base));
}

ParamPoly::ParamPoly(std::vector<FermatReal> params, OrderBound k, std::vector<ParamPolyTerm> terms)
    : params_(std::move(params)), bound_(std::move(k)), terms_(std::move(terms)) {
  for (const auto& p : params_) {
    if (!p.is_infinitesimal()) throw DomainError("parameters must be infinitesimal");
    if (!in_D(p, bound_)) throw NotInIdeal("parameter is not in D_" + bound_.to_string());
  }
  for (const auto& t : terms_) {
    if (t.multi_index.size() != params_.size()) {
      throw LengthMismatch("multi-index length must equal the number of parameters");
    }
    if (!bound_.is_infinite()) {
      std::uint64_t degree = 0;
      for (auto q : t.multi_index) degree += q;
      if (Exponent(static_cast<std::int64_t>(degree)) > bound_.value()) {
        throw DomainError("multi-index degree exceeds the parameter bound");
      }
    }
  }
}

FermatReal eval_param_poly(const ParamPoly& p, const Env& env) {
  FermatReal sum(0.0);
  for (const auto& t : p.terms()) {
    FermatReal m = monomial(p.params(), t.multi_index);
    if (m.is_zero()) continue;
    sum += eval(t.coefficient, env) * m;
  }
  return sum;
}

}  // namespace fermat
