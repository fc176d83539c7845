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

#include <benchmark/benchmark.h>

#include "fermat/fermat.hpp"

namespace {

using fermat::Exponent;
using fermat::FermatReal;

FermatReal sample(int shift) {
  return 1.0 + shift + fermat::dt(Exponent(6)) - 2.0 * fermat::dt(Exponent(3)) +
         0.5 * fermat::dt(Exponent(3, 2)) + fermat::dt(Exponent(1));
}

void BM_Mul(benchmark::State& state) {
  FermatReal x = sample(0);
  FermatReal y = sample(1);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Mul);

void BM_Invert(benchmark::State& state) {
  FermatReal x = sample(2);
  for (auto _ : state) benchmark::DoNotOptimize(fermat::invert(x));
}
BENCHMARK(BM_Invert);

void BM_ExtApply(benchmark::State& state) {
  FermatReal x = sample(0);
  auto f = fermat::ElementaryFn::catalog()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(f.name());
  for (auto _ : state) benchmark::DoNotOptimize(fermat::ext_apply(f, x));
}
BENCHMARK(BM_ExtApply)->DenseRange(0, 8);

void BM_PowNat(benchmark::State& state) {
  FermatReal x = fermat::dt(Exponent(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fermat::pow_nat(x, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_PowNat)->Arg(2)->Arg(8)->Arg(32);

void BM_ParseEval(benchmark::State& state) {
  const fermat::Env env{{"x", 0.5 + fermat::dt(Exponent(3))}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fermat::eval(fermat::parse("sin(x)^2 + cos(x)^2 - (1+dt[2])^-1"), env));
  }
}
BENCHMARK(BM_ParseEval);

}  // namespace

BENCHMARK_MAIN();
