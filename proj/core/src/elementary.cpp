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

#include "fermat/elementary.hpp"

#include <cmath>
#include <numbers>

#include "fermat/errors.hpp"
#include "fermat/format.hpp"
#include "fermat/order.hpp"

namespace fermat {

namespace {

bool is_integral(double c) { return std::isfinite(c) && std::trunc(c) == c; }

// Coefficients of P_0..P_n as polynomials in T = tan x, already divided by i!.
std::vector<std::vector<double>> tan_polynomials(std::size_t n) {
  std::vector<std::vector<double>> polys;
  polys.push_back({0.0, 1.0});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = polys.back();
    // derivative of p
    std::vector<double> dp(p.size() > 1 ? p.size() - 1 : 1, 0.0);
    for (std::size_t k = 1; k < p.size(); ++k) dp[k - 1] = static_cast<double>(k) * p[k];
    // (1 + T^2) * dp / (i + 1)
    std::vector<double> next(dp.size() + 2, 0.0);
    for (std::size_t k = 0; k < dp.size(); ++k) {
      next[k] += dp[k];
      next[k + 2] += dp[k];
    }
    for (auto& c : next) c /= static_cast<double>(i + 1);
    polys.push_back(std::move(next));
  }
  return polys;
}

double horner(const std::vector<double>& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::optional<ElementaryFn> ElementaryFn::by_name(std::string_view name) {
  if (name == "exp") return exp();
  if (name == "ln") return ln();
  if (name == "sin") return sin();
  if (name == "cos") return cos();
  if (name == "tan") return tan();
  if (name == "atan") return atan();
  if (name == "sqrt") return sqrt();
  if (name == "recip") return recip();
  return std::nullopt;
}

std::array<ElementaryFn, 9> ElementaryFn::catalog() {
  return {exp(), ln(), sin(), cos(), tan(), atan(), sqrt(), recip(), pow_const(2.5)};
}

std::string ElementaryFn::name() const {
  switch (kind_) {
    case Kind::Exp: return "exp";
    case Kind::Ln: return "ln";
    case Kind::Sin: return "sin";
    case Kind::Cos: return "cos";
    case Kind::Tan: return "tan";
    case Kind::Atan: return "atan";
    case Kind::Sqrt: return "sqrt";
    case Kind::Recip: return "recip";
    case Kind::PowConst: return "pow_const(" + format_double(power_) + ")";
  }
  return "?";
}

bool ElementaryFn::in_domain(double x) const {
  if (!std::isfinite(x)) return false;
  switch (kind_) {
    case Kind::Ln:
      return x > 0.0;
    case Kind::Sqrt:
      return x > 0.0;
    case Kind::Recip:
      return x != 0.0;
    case Kind::Tan:
      return std::cos(x) != 0.0;
    case Kind::PowConst:
      if (is_integral(power_)) return power_ >= 0.0 || x != 0.0;
      return x > 0.0;
    default:
      return true;
  }
}

std::string_view ElementaryFn::domain_description() const {
  switch (kind_) {
    case Kind::Ln:
    case Kind::Sqrt:
      return "standard part must be > 0";
    case Kind::Recip:
      return "standard part must be != 0";
    case Kind::Tan:
      return "cos of standard part must be != 0";
    case Kind::PowConst:
      if (is_integral(power_)) return "standard part must be != 0";
      return "standard part must be > 0";
    default:
      return "standard part must be finite";
  }
}

double ElementaryFn::value(double x) const {
  switch (kind_) {
    case Kind::Exp: return std::exp(x);
    case Kind::Ln: return std::log(x);
    case Kind::Sin: return std::sin(x);
    case Kind::Cos: return std::cos(x);
    case Kind::Tan: return std::tan(x);
    case Kind::Atan: return std::atan(x);
    case Kind::Sqrt: return std::sqrt(x);
    case Kind::Recip: return 1.0 / x;
    case Kind::PowConst: return std::pow(x, power_);
  }
  return NAN;
}

std::vector<double> ElementaryFn::taylor_coefficients(double x, std::size_t n) const {
  std::vector<double> c(n + 1, 0.0);
  c[0] = value(x);
  switch (kind_) {
    case Kind::Exp:
      for (std::size_t i = 1; i <= n; ++i) c[i] = c[i - 1] / static_cast<double>(i);
      break;
    case Kind::Ln: {
      double xi = 1.0;
      for (std::size_t i = 1; i <= n; ++i) {
        xi *= x;
        double sign = (i % 2 == 1) ? 1.0 : -1.0;
        c[i] = sign / (static_cast<double>(i) * xi);
      }
      break;
    }
    case Kind::Sin:
    case Kind::Cos: {
      const double s = std::sin(x);
      const double co = std::cos(x);
      // derivative cycles starting at sin: s, co, -s, -co
      const double sin_cycle[4] = {s, co, -s, -co};
      const std::size_t shift = kind_ == Kind::Sin ? 0 : 1;
      double inv_fact = 1.0;
      for (std::size_t i = 1; i <= n; ++i) {
        inv_fact /= static_cast<double>(i);
        c[i] = sin_cycle[(i + shift) % 4] * inv_fact;
      }
      break;
    }
    case Kind::Tan: {
      auto polys = tan_polynomials(n);
      const double t = c[0];
      for (std::size_t i = 1; i <= n; ++i) c[i] = horner(polys[i], t);
      break;
    }
    case Kind::Atan: {
      const double theta = c[0];
      const double co = std::cos(theta);
      double co_pow = 1.0;
      for (std::size_t i = 1; i <= n; ++i) {
        co_pow *= co;
        const double k = static_cast<double>(i);
        c[i] = co_pow * std::sin(k * (theta + std::numbers::pi / 2)) / k;
      }
      if (n >= 1) c[1] = 1.0 / (1.0 + x * x);
      break;
    }
    case Kind::Sqrt: {
      double binom = 1.0;
      double xi = 1.0;
      for (std::size_t i = 1; i <= n; ++i) {
        binom *= (0.5 - static_cast<double>(i - 1)) / static_cast<double>(i);
        xi *= x;
        c[i] = binom * c[0] / xi;
      }
      break;
    }
    case Kind::Recip: {
      double xi = x;
      for (std::size_t i = 1; i <= n; ++i) {
        xi *= x;
        c[i] = ((i % 2 == 0) ? 1.0 : -1.0) / xi;
      }
      break;
    }
    case Kind::PowConst: {
      double binom = 1.0;
      for (std::size_t i = 1; i <= n; ++i) {
        binom *= (power_ - static_cast<double>(i - 1)) / static_cast<double>(i);
        c[i] = binom == 0.0 ? 0.0 : binom * std::pow(x, power_ - static_cast<double>(i));
      }
      break;
    }
  }
  return c;
}

double ElementaryFn::derivative(double x, std::size_t i) const {
  double coeff = taylor_coefficients(x, i)[i];
  for (std::size_t k = 2; k <= i; ++k) coeff *= static_cast<double>(k);
  return coeff;
}

FermatReal ext_apply(const ElementaryFn& f, const FermatReal& x) {
  const double s = x.standard_part();
  if (!f.in_domain(s)) {
    throw DomainError(f.name() + ": " + std::string(f.domain_description()));
  }
  if (x.is_standard()) return FermatReal(f.value(s));

  const FermatReal h = x.infinitesimal_part();
  const auto depth = static_cast<std::size_t>(order(h).floor());
  const auto coeffs = f.taylor_coefficients(s, depth);

  FermatReal result(coeffs[0]);
  FermatReal power(1.0);
  for (std::size_t i = 1; i <= depth; ++i) {
    power *= h;
    if (power.is_zero()) break;
    if (coeffs[i] != 0.0) result += FermatReal(coeffs[i]) * power;
  }
  return result;
}

}  // namespace fermat
