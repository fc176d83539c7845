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
#include <optional>
#include <span>
#include <string_view>

#include "fermat/exponent.hpp"
#include "fermat/fermat_real.hpp"

namespace fermat {

// Orders of infinitesimals, the ideals D_a, and the total order on Fermat
// reals.

/// Largest order 1/a_1 among the terms; 0 for a standard real (including a
/// nonzero standard part with infinitesimal terms, whose order is still that
/// of its leading term).
Exponent order(const FermatReal& x);

/// x in D_a: st(x) == 0 and order(x) < a + 1. For a == inf only st(x) == 0 is
/// required.
bool in_D(const FermatReal& x, const OrderBound& a);

/// Smallest k with x^k == 0, i.e. floor(order(x)) + 1 for an infinitesimal;
/// 1 for zero; nullopt when st(x) != 0.
std::optional<std::uint64_t> nilpotency_index(const FermatReal& x);

/// Decides h_1^i_1 * ... * h_n^i_n == 0 for nonzero infinitesimals of the
/// given orders, from the exact test sum i_k / order_k > 1.
///
/// Throws LengthMismatch when the lists differ in length or are empty, and
/// DomainError for an order below 1 or an exponent of 0.
bool product_power_zero(std::span<const Exponent> orders, std::span<const std::uint64_t> exps);

/// Order of a nonzero product of powers: (sum i_k / order_k)^-1. Throws
/// ProductIsZero when the product vanishes.
Exponent product_power_order(std::span<const Exponent> orders,
                             std::span<const std::uint64_t> exps);

/// Product lies in D_p \ {0}: 1/(p+1) < sum i_k / order_k <= 1.
bool ideal_of_product(std::span<const Exponent> orders, std::span<const std::uint64_t> exps,
                      const Exponent& p);

/// The k solving 1/k + sum j_i / (alpha_i + 1) = 1. Throws NoFiniteOrder when
/// the sum is >= 1, DomainError when j is the zero vector or some alpha_i <= 0.
Exponent cancellation_order(std::span<const std::uint64_t> j, std::span<const Exponent> alpha);

enum class Verdict { LT, EQ, GT };

std::string_view to_string(Verdict v);

/// Total order: the sign of the canonical difference x - y, read from its
/// standard part, or from the coefficient of its largest-order term when the
/// standard part vanishes.
Verdict compare(const FermatReal& x, const FermatReal& y);

FermatReal abs(const FermatReal& x);

inline bool operator<(const FermatReal& x, const FermatReal& y) { return compare(x, y) == Verdict::LT; }
inline bool operator>(const FermatReal& x, const FermatReal& y) { return compare(x, y) == Verdict::GT; }
inline bool operator<=(const FermatReal& x, const FermatReal& y) { return compare(x, y) != Verdict::GT; }
inline bool operator>=(const FermatReal& x, const FermatReal& y) { return compare(x, y) != Verdict::LT; }

}  // namespace fermat
