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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fermat/cli/graph.hpp"
#include "test_util.hpp"

namespace fermat::acceptance {
namespace {

using testing::dt_of;
using testing::F;

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

bool coeffs_close(const FermatReal& x, const FermatReal& y) { return testing::approx_equal(x, y, 1e-12); }

// 1. identity corpus
void identity_corpus() {
  require(F("(1+dt[2])^-1") == 1.0 - dt_of(2) + dt_of(1), "(1+dt2)^-1");
  require(invert(1.0 + dt_of(2)) == 1.0 - dt_of(2) + dt_of(1), "invert(1+dt2)");
  const std::vector<std::pair<Exponent, Exponent>> pairs = {
      {2, 2}, {2, 3}, {3, 6}, {Exponent(3, 2), 3}};
  for (const auto& [a, b] : pairs) {
    require(dt(a) * dt(b) == dt(a * b / (a + b)), "dt_a*dt_b for a=" + a.to_string() + " b=" + b.to_string());
  }
  require(pow_nat(dt_of(3), 2) == dt_of(3, 2), "dt3^2");
  require(pow_nat(dt_of(21, 10), 2) == dt_of(21, 20), "dt2.1^2");
  require(pow_nat(dt_of(21, 10), 3).is_zero(), "dt2.1^3 = 0");
  require(!pow_nat(dt_of(21, 10), 2).is_zero(), "dt2.1^2 != 0");
  FermatReal mixed = 5.0 + dt_of(4) - 3.0 * dt_of(2);
  for (const FermatReal& h : {dt_of(1), dt_of(2), dt_of(3), mixed - FermatReal(mixed.standard_part())}) {
    require((dt_of(1) * h).is_zero(), "dt*h for h=" + format(h));
  }
  FermatReal h = dt_of(1);
  require(coeffs_close(ext_apply(ElementaryFn::exp(), h), 1.0 + h), "e^dt");
  require(coeffs_close(ext_apply(ElementaryFn::sin(), h), h), "sin dt");
  require(coeffs_close(ext_apply(ElementaryFn::cos(), h), FermatReal(1.0)), "cos dt");
  FermatReal h3 = dt_of(3);
  require(coeffs_close(ext_apply(ElementaryFn::sin(), h3), h3 - (1.0 / 6.0) * pow_nat(h3, 3)), "sin dt3");
}

// 2. exhaustive product-of-powers oracle
FermatReal product_chain(const std::vector<Exponent>& orders, const std::vector<std::uint64_t>& exps) {
  FermatReal p(1.0);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    FermatReal h = orders[i] == Exponent(1) ? dt(orders[i]) : dt(orders[i]) + 0.5 * dt_of(1);
    p = p * pow_nat(h, exps[i]);
  }
  return p;
}

void product_oracle() {
  const std::vector<Exponent> orders = {1, Exponent(3, 2), 2, 3, 4, 6};
  std::size_t cases = 0;
  std::vector<Exponent> os;
  std::vector<std::uint64_t> es;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (!os.empty()) {
      ++cases;
      FermatReal p = product_chain(os, es);
      require(product_power_zero(os, es) == p.is_zero(), "zero mismatch");
      if (!p.is_zero()) require(product_power_order(os, es) == order(p), "order mismatch");
    }
    if (left == 0) return;
    for (const auto& a : orders) {
      for (std::uint64_t e = 1; e <= 3; ++e) {
        os.push_back(a);
        es.push_back(e);
        rec(left - 1);
        os.pop_back();
        es.pop_back();
      }
    }
  };
  rec(3);
  require(cases == 6174, "case count " + std::to_string(cases));
}

// 3. heat / Schwarz bookkeeping
void heat_schwarz() {
  FermatReal dx = dt_of(6);
  FermatReal dtime = dt_of(2);
  FermatReal dv = dx * dx * dx;
  require(order(dv * dtime) == Exponent(1), "order(dv*dt) = 1");
  require((dtime * dv * dx).is_zero(), "dt*dv*dx = 0");
  FermatReal k = dt_of(2);
  FermatReal h = dt_of(4);
  FermatReal j = dt_of(4);
  require(j * k * h == dt_of(1), "jkh = dt");
  Expr f = parse("sin(u)*v");
  auto g = [&](const FermatReal& u, const FermatReal& v) { return eval(f, {{"u", u}, {"v", v}}); };
  FermatReal zero(0.0);
  FermatReal lhs = j * (g(h, k) - g(h, zero) - g(zero, k) + g(zero, zero));
  // d2f/dudv (0,0) = cos(0) = 1
  require(lhs == j * k * h * FermatReal(std::cos(0.0)), "second difference");
}

// 4. the nine properties of D_a
void ideal_properties() {
  auto rng = testing::make_rng(4);
  const std::vector<Exponent> subs = {Exponent(1, 2), 1, Exponent(6, 5), Exponent(3, 2), 2,
                                      Exponent(21, 10), 3, 4, Exponent(11, 2)};
  auto inf = [&] { return testing::random_nonzero_infinitesimal(rng); };
  for (int i = 0; i < 1000; ++i) {
    FermatReal x = inf();
    FermatReal y = inf();
    FermatReal r = testing::random_fermat(rng);
    Exponent a = testing::pick(rng, subs);
    Exponent b = testing::pick(rng, subs);
    if (a > b) std::swap(a, b);
    if (in_D(x, a)) require(in_D(x, b), "monotone");
    require(in_D(x, order(x)), "x in D_order(x)");
    for (std::uint64_t n = 1; n <= 6; ++n) {
      require(in_D(x, Exponent(static_cast<std::int64_t>(n))) == pow_nat(x, n + 1).is_zero(),
              "integer subscript");
    }
    if (in_D(x, a)) require(pow_nat(x, a.ceil().convert_to<std::uint64_t>() + 1).is_zero(), "ceiling power");
    Exponent kk(static_cast<std::int64_t>(order(x).floor()));
    require(in_D(x, kk) && !in_D(x, kk - Exponent(1)), "integer part of order");
    require(testing::leading_part(x * y) == testing::leading_part(x) * testing::leading_part(y),
            "leading part of product");
    if (!(x * y).is_zero()) {
      require(order(x * y).reciprocal() == order(x).reciprocal() + order(y).reciprocal(),
              "order of product");
    }
    if (order(x) != order(y)) require(order(x + y) == std::max(order(x), order(y)), "order of sum");
    if (in_D(x, a) && in_D(y, a)) {
      require(in_D(x + y, a) && in_D(-x, a) && in_D(r * x, a), "ideal closure");
    }
  }
  FermatReal x = dt_of(21, 10);
  Exponent a(6, 5);
  require(in_D(x, a), "dt2.1 in D_1.2");
  require(!pow_nat(x, 2).is_zero() && pow_nat(x, 3).is_zero(), "ceiling counter-case");
}

// 5. order relation
void order_relation() {
  auto rng = testing::make_rng(5);
  testing::GenOptions o;
  o.integer = true;
  o.max_terms = 2;
  o.orders = {1, 2, 3};
  for (int i = 0; i < 10'000; ++i) {
    FermatReal x = testing::random_fermat(rng, o);
    FermatReal y = testing::random_fermat(rng, o);
    FermatReal z = testing::random_fermat(rng, o);
    int holds = (x < y) + (x == y) + (y < x);
    require(holds == 1, "trichotomy " + format(x) + " " + format(y));
    if (x <= y && y <= z) require(x <= z, "transitivity");
  }
  require(dt_of(2) - 3.0 * dt_of(1) > FermatReal(0.0), "dt2 - 3dt > 0");
  require(2.0 + dt_of(2) > 3.0 * dt_of(1), "2 + dt2 > 3dt");
  require(1.0 + dt_of(2) < 3.0 + dt_of(1), "1 + dt2 < 3 + dt");
  require(3.0 * dt_of(5) > 2.0 * dt_of(5), "3dt5 > 2dt5");
  require(dt_of(5) - 2.0 * dt_of(3) + 3.0 * dt_of(1) < dt_of(5) - 2.0 * dt_of(3) + dt_of(3, 2),
          "dt5 - 2dt3 + 3dt < dt5 - 2dt3 + dt3/2");
  for (int i = 0; i < 5000; ++i) {
    FermatReal x = testing::random_fermat(rng, o);
    bool sandwiched = true;
    for (double r : {1.0, 1e-1, 1e-3, 1e-9}) sandwiched = sandwiched && FermatReal(-r) < x && x < FermatReal(r);
    require(sandwiched == x.is_infinitesimal(), "sandwich " + format(x));
  }
}

// 6. derivation formula against central differences
void derivation_formula() {
  for (const auto& f : ElementaryFn::catalog()) {
    for (int k = 0; k < 20; ++k) {
      double x = 0.1 + 0.07 * k;
      double m = derive(f, x);
      constexpr double kStep = 1e-5;
      double fd = (f.value(x + kStep) - f.value(x - kStep)) / (2 * kStep);
      require(std::fabs(m - fd) <= 1e-6 * std::fabs(fd), f.name() + " slope at " + std::to_string(x));
      FermatReal residual = ext_apply(f, x + dt_of(1)) - (f.value(x) + m * dt_of(1));
      require(residual.is_zero(), f.name() + " residual " + format(residual));
    }
  }
}

// 7. cancellation laws
void cancellation() {
  std::vector<std::uint64_t> j = {1};
  std::vector<Exponent> alpha = {Exponent(1)};
  require(cancellation_order(j, alpha) == Exponent(2), "k = 2");
  auto rng = testing::make_rng(7);
  FermatReal h = dt_of(1);
  for (int i = 0; i < 1000; ++i) {
    FermatReal m = testing::random_fermat(rng);
    require(h * m == h * iota(m, 2), "h*m = h*iota_2(m) for m=" + format(m));
  }
}

// 8. wave-equation lemmas
void wave_lemmas() {
  Expr e = parse("m*cos(h)^3");
  FermatReal m(1.0);
  require(eq_up_to(eval(e, {{"m", m}, {"h", dt_of(4)}}), m, 2), "holds at dt4");
  require(!eq_up_to(eval(e, {{"m", m}, {"h", dt_of(9, 2)}}), m, 2), "fails at dt9/2");

  std::vector<std::pair<ParamPoly, ParamPoly>> corpus;
  std::vector<FermatReal> p2 = {dt_of(2)};
  corpus.emplace_back(ParamPoly(p2, 2, {{{0}, parse("sin(x)")}, {{1}, parse("x^2")}}),
                      ParamPoly(p2, 2, {{{0}, parse("sin(x)")}}));
  corpus.emplace_back(ParamPoly(p2, 2, {{{0}, parse("exp(x)")}, {{1}, parse("exp(x)")}}),
                      ParamPoly(p2, 2, {{{0}, parse("exp(x)")}}));
  std::vector<FermatReal> p32 = {dt_of(3, 2), dt_of(2)};
  corpus.emplace_back(ParamPoly(p32, 2, {{{0, 0}, parse("cos(x)")}, {{1, 0}, parse("x")},
                                         {{0, 1}, parse("x^3")}, {{1, 1}, parse("atan(x)")}}),
                      ParamPoly(p32, 2, {{{0, 0}, parse("cos(x)")}, {{1, 0}, parse("x")}}));
  FermatReal h = dt_of(1);
  for (const auto& [f, g] : corpus) {
    for (int i = 0; i <= 10; ++i) {
      FermatReal x(-1.0 + 0.2 * i);
      require(eq_up_to(eval_param_poly(f, {{"x", x}}), eval_param_poly(g, {{"x", x}}), 2), "f =2 g");
      FermatReal df = eval_param_poly(f, {{"x", x + h}}) - eval_param_poly(f, {{"x", x}});
      FermatReal dg = eval_param_poly(g, {{"x", x + h}}) - eval_param_poly(g, {{"x", x}});
      require(df == dg, "equal differences");
    }
  }
}

// 9. identity principle
void identity_principle() {
  auto rng = testing::make_rng(9);
  testing::GenOptions o;
  o.integer = true;
  o.orders = {1, 2, 3};
  std::vector<FermatReal> points;
  for (double r : {0.0, 1.0, -1.0, 2.0, -2.0}) points.push_back(r + dt_of(2));
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    std::vector<FermatReal> a(n + 1);
    bool any = false;
    while (!any) {
      for (auto& c : a) {
        c = std::bernoulli_distribution(0.3)(rng) ? FermatReal(0.0) : testing::random_fermat(rng, o);
        any = any || !c.is_zero();
      }
    }
    bool distinguished = false;
    for (const auto& p : points) {
      FermatReal v(0.0);
      for (std::size_t i = 0; i <= n; ++i) v += a[i] * pow_nat(p, i);
      distinguished = distinguished || !v.is_zero();
    }
    require(distinguished, "no distinguishing point");
  }
}

// 10. graph_delta
std::vector<double> curve(const FermatReal& x, double delta) {
  std::vector<double> v;
  for (const auto& p : cli::sample_graph(x, delta, 64).points) v.push_back(p.value);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void graph_delta() {
  auto rng = testing::make_rng(10);
  testing::GenOptions o;
  o.integer = true;
  std::vector<FermatReal> values;
  while (values.size() < 50) {
    FermatReal x = testing::random_fermat(rng, o);
    if (std::find(values.begin(), values.end(), x) == values.end()) values.push_back(x);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      require(curve(values[i], 0.01) != curve(values[j], 0.01), "injectivity");
    }
  }

  o.orders = {1, 2, 3};
  int pairs = 0;
  while (pairs < 50) {
    FermatReal x = testing::random_fermat(rng, o);
    FermatReal y = testing::random_fermat(rng, o);
    if (!(x < y)) continue;
    ++pairs;
    bool found = false;
    double delta = 0.1;
    for (int halving = 0; halving <= 20 && !found; ++halving, delta /= 2) {
      auto cx = cli::sample_graph(x, delta, 64).points;
      auto cy = cli::sample_graph(y, delta, 64).points;
      found = true;
      for (std::size_t k = 1; k < cx.size(); ++k) found = found && cx[k].value < cy[k].value;
    }
    require(found, "no delta for " + format(x) + " < " + format(y));
  }

  const std::vector<std::pair<std::string, std::pair<double, std::string>>> goldens = {
      {"dt[2]", {0.05, "dt2.svg"}}, {"1", {0.01, "real_one.svg"}}, {"1 - 2*dt[3] + dt[1]", {0.01, "mixed.svg"}}};
  for (const auto& [text, plot] : goldens) {
    std::ostringstream os;
    cli::write_svg(os, cli::sample_graph(F(text), plot.first, 64), text);
    require(os.str() == read_file(std::string(FERMAT_GOLDEN_DIR) + "/" + plot.second), "golden " + plot.second);
  }
}

// 11. front end
FermatReal random_canonical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> scale(-12, 12);
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 12);
  auto coeff = [&] { return mant(rng) * std::pow(10.0, scale(rng)); };
  std::vector<Term> raw;
  for (int i = std::uniform_int_distribution<int>(0, 4)(rng); i > 0; --i) {
    Exponent ord(num(rng), den(rng));
    if (ord < Exponent(1)) ord = ord.reciprocal();
    raw.push_back({coeff(), ord.reciprocal()});
  }
  double s = std::bernoulli_distribution(0.3)(rng) ? 0.0 : coeff();
  return FermatReal::canonicalize(s, std::move(raw));
}

void front_end() {
  auto rng = testing::make_rng(11);
  for (int i = 0; i < 10'000; ++i) {
    FermatReal x = random_canonical(rng);
    require(F(format(x)) == x, "round trip " + format(x));
  }
  const std::vector<std::string> seeds = {"1 + dt[3] + dt[2] + dt[1]", "(1+dt[2])^-1", "sin(x)*cos(y) - 2.5e-3",
                                          "pow(2, dt[3/2]+1)", "log(3, 1 + dt[1.5])", "-x^2/(1+x)"};
  const std::string alphabet = "0123456789+-*/^().,[]eEdtxy sincolgqrpw_$";
  std::uniform_int_distribution<std::size_t> pick_char(0, alphabet.size() - 1);
  for (int i = 0; i < 10'000; ++i) {
    std::string s = testing::pick(rng, seeds);
    for (int k = std::uniform_int_distribution<int>(1, 4)(rng); k > 0; --k) {
      std::size_t at = std::uniform_int_distribution<std::size_t>(0, s.size())(rng);
      switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: s.insert(s.begin() + static_cast<std::ptrdiff_t>(at), alphabet[pick_char(rng)]); break;
        case 1: if (at < s.size()) s.erase(at, 1); break;
        case 2: if (at < s.size()) s[at] = alphabet[pick_char(rng)]; break;
        default: s = s.substr(0, at); break;
      }
    }
    try {
      parse(s);
    } catch (const ParseError& e) {
      require(e.offset() <= s.size(), "offset out of range: " + s);
    } catch (const NonPositiveOrder& e) {
      require(e.offset().has_value() && *e.offset() <= s.size(), "missing offset: " + s);
    }
  }
}

}  // namespace
}  // namespace fermat::acceptance

int main() {
  using namespace fermat::acceptance;
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"identity corpus", identity_corpus},
      {"product-of-powers oracle", product_oracle},
      {"heat and Schwarz bookkeeping", heat_schwarz},
      {"D_a properties", ideal_properties},
      {"order relation", order_relation},
      {"derivation formula", derivation_formula},
      {"cancellation laws", cancellation},
      {"wave lemmas", wave_lemmas},
      {"identity principle", identity_principle},
      {"graph_delta", graph_delta},
      {"front end", front_end},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
    }
    std::printf("%s %zu %s%s%s\n", detail.empty() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    if (!detail.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
