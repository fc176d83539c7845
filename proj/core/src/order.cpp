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

#include "fermat/order.hpp"

#include "fermat/errors.hpp"

namespace fermat {

namespace {

// sum i_k / order_k, validated.
Exponent reciprocal_order_sum(std::span<const Exponent> orders,
                              std::span<const std::uint64_t> exps) {
  if (orders.size() != exps.size() || orders.empty()) {
    throw LengthMismatch("orders and exponents must be nonempty lists of equal length");
  }
  Exponent sum;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (orders[k] < Exponent(1)) {
      throw DomainError("order of a nonzero infinitesimal must be >= 1, got " +
                        orders[k].to_string());
    }
    if (exps[k] == 0) throw DomainError("product exponents must be >= 1");
    sum += Exponent(static_cast<std::int64_t>(exps[k])) / orders[k];
  }
  return sum;
}

}  // namespace

Exponent order(const FermatReal& x) {
  if (x.terms().empty()) return Exponent(0);
  return x.terms().front().order();
}

bool in_D(const FermatReal& x, const OrderBound& a) {
  if (x.standard_part() != 0.0) return false;
  if (a.is_infinite()) return true;
  return order(x) < a.value() + Exponent(1);
}

std::optional<std::uint64_t> nilpotency_index(const FermatReal& x) {
  if (x.standard_part() != 0.0) return std::nullopt;
  if (x.is_zero()) return 1;
  return static_cast<std::uint64_t>(order(x).floor() + 1);
}

bool product_power_zero(std::span<const Exponent> orders, std::span<const std::uint64_t> exps) {
  return reciprocal_order_sum(orders, exps) > Exponent(1);
}

Exponent product_power_order(std::span<const Exponent> orders,
                             std::span<const std::uint64_t> exps) {
  Exponent sum = reciprocal_order_sum(orders, exps);
  if (sum > Exponent(1)) throw ProductIsZero();
  return sum.reciprocal();
}

bool ideal_of_product(std::span<const Exponent> orders, std::span<const std::uint64_t> exps,
                      const Exponent& p) {
  if (p.sign() <= 0) throw DomainError("ideal subscript must be positive");
  Exponent sum = reciprocal_order_sum(orders, exps);
  return (p + Exponent(1)).reciprocal() < sum && sum <= Exponent(1);
}

Exponent cancellation_order(std::span<const std::uint64_t> j, std::span<const Exponent> alpha) {
  if (j.size() != alpha.size() || j.empty()) {
    throw LengthMismatch("j and alpha must be nonempty lists of equal length");
  }
  Exponent sum;
  bool any = false;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (alpha[i].sign() <= 0) throw DomainError("alpha must be positive");
    if (j[i] == 0) continue;
    any = true;
    sum += Exponent(static_cast<std::int64_t>(j[i])) / (alpha[i] + Exponent(1));
  }
  if (!any) throw DomainError("j must not be the zero vector");
  if (sum >= Exponent(1)) throw NoFiniteOrder();
  return (Exponent(1) - sum).reciprocal();
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::LT:
      return "LT";
    case Verdict::EQ:
      return "EQ";
    case Verdict::GT:
      return "GT";
  }
  return "?";
}

Verdict compare(const FermatReal& x, const FermatReal& y) {
  FermatReal d = x - y;
  double lead = d.standard_part();
  if (lead == 0.0) {
    if (d.terms().empty()) return Verdict::EQ;
    lead = d.terms().front().coeff;
  }
  return lead < 0.0 ? Verdict::LT : Verdict::GT;
}

FermatReal abs(const FermatReal& x) {
  return compare(x, FermatReal(0.0)) == Verdict::LT ? -x : x;
}

}  // namespace fermat
