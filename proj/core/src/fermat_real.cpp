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

#include "fermat/fermat_real.hpp"

#include <algorithm>
#include <utility>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

const Exponent kOne{1};

// Normalizes -0.0 so that structural equality and formatting agree.
double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

// Merges two ascending term lists, summing coefficients of equal exponents.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, double sign_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({sign_b * b[j].coeff, b[j].exp});
      ++j;
    } else {
      double c = a[i].coeff + sign_b * b[j].coeff;
      if (c != 0.0) out.push_back({c, a[i].exp});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FermatReal::FermatReal(double r) : std_(clean_zero(r)) {}

FermatReal FermatReal::canonicalize(double std_part, std::vector<Term> raw) {
  FermatReal x;
  x.std_ = std_part;
  std::vector<Term> kept;
  kept.reserve(raw.size());
  for (auto& term : raw) {
    if (term.exp.sign() < 0) throw NonPositiveOrder("negative potential exponent");
    if (term.exp > kOne) continue;
    if (term.exp.is_zero()) {
      x.std_ += term.coeff;
      continue;
    }
    kept.push_back(std::move(term));
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const Term& a, const Term& b) { return a.exp < b.exp; });
  for (auto& term : kept) {
    if (!x.terms_.empty() && x.terms_.back().exp == term.exp) {
      x.terms_.back().coeff += term.coeff;
    } else {
      x.terms_.push_back(std::move(term));
    }
  }
  std::erase_if(x.terms_, [](const Term& t) { return t.coeff == 0.0; });
  x.std_ = clean_zero(x.std_);
  return x;
}

FermatReal FermatReal::dt(const Exponent& order) {
  if (order.sign() <= 0) throw NonPositiveOrder("dt order must be positive, got " + order.to_string());
  FermatReal x;
  if (order < kOne) return x;
  x.terms_.push_back({1.0, order.reciprocal()});
  return x;
}

FermatReal dt(const Exponent& order) { return FermatReal::dt(order); }

FermatReal FermatReal::infinitesimal_part() const {
  FermatReal h = *this;
  h.std_ = 0.0;
  return h;
}

FermatReal& FermatReal::operator+=(const FermatReal& o) {
  std_ = clean_zero(std_ + o.std_);
  terms_ = merge_terms(terms_, o.terms_, 1.0);
  return *this;
}

FermatReal& FermatReal::operator-=(const FermatReal& o) {
  std_ = clean_zero(std_ - o.std_);
  terms_ = merge_terms(terms_, o.terms_, -1.0);
  return *this;
}

FermatReal operator-(const FermatReal& a) {
  FermatReal r = a;
  r.std_ = clean_zero(-r.std_);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

FermatReal operator*(const FermatReal& a, const FermatReal& b) {
  // Distribute over (std, terms) x (std, terms); t^p * t^q = t^(p+q) and any
  // summed exponent above 1 is o(t), hence zero.
  std::vector<Term> raw;
  raw.reserve(a.terms_.size() + b.terms_.size() + a.terms_.size() * b.terms_.size());
  if (b.std_ != 0.0) {
    for (const auto& t : a.terms_) raw.push_back({t.coeff * b.std_, t.exp});
  }
  if (a.std_ != 0.0) {
    for (const auto& t : b.terms_) raw.push_back({a.std_ * t.coeff, t.exp});
  }
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Exponent e = ta.exp + tb.exp;
      if (e > kOne) break;  // b's exponents ascend
      raw.push_back({ta.coeff * tb.coeff, std::move(e)});
    }
  }
  return FermatReal::canonicalize(a.std_ * b.std_, std::move(raw));
}

FermatReal& FermatReal::operator*=(const FermatReal& o) {
  *this = *this * o;
  return *this;
}

FermatReal pow_nat(const FermatReal& x, std::uint64_t n) {
  FermatReal result(1.0);
  FermatReal base = x;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

FermatReal invert(const FermatReal& x) {
  double s = x.standard_part();
  if (s == 0.0) throw NotInvertible();
  if (x.is_standard()) return FermatReal(1.0 / s);

  // 1/x = (1/s) * sum_{j=0}^{J} (-h/s)^j, with h^(J+1) = 0 for J = floor(omega(h)).
  FermatReal ratio = x.infinitesimal_part() * FermatReal(-1.0 / s);
  auto depth = x.terms().front().order().floor();
  FermatReal sum(1.0);
  FermatReal power(1.0);
  for (Exponent::Integer j = 1; j <= depth; ++j) {
    power *= ratio;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * FermatReal(1.0 / s);
}

FermatReal iota(const FermatReal& x, const OrderBound& k) {
  if (k.is_infinite()) return FermatReal(x.standard_part());
  std::vector<Term> kept;
  for (const auto& t : x.terms()) {
    if (t.order() > k.value()) kept.push_back(t);
  }
  return FermatReal::canonicalize(x.standard_part(), std::move(kept));
}

bool eq_up_to(const FermatReal& x, const FermatReal& y, const OrderBound& k) {
  return iota(x, k) == iota(y, k);
}

}  // namespace fermat
