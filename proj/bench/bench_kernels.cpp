// Copyright 2026 The Mathieu Series Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference loops against the blocked OpenMP kernels.

#include <benchmark/benchmark.h>

#include <cmath>

#include "mathieu/kernels.hpp"

namespace {

const mathieu::PowerLogTerm kTerm{1.0, 2.0, 1.0, 1.0, 1.0, std::log(1e3)};

void BM_PowerLogSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mathieu::sum_powerlog_serial(kTerm, 2, state.range(0)).sum);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PowerLogParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mathieu::sum_powerlog(kTerm, 2, state.range(0)).sum);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FactorialPowerSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mathieu::sum_factorial_power_serial(1e-3, 0, state.range(0)).sum);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FactorialPowerParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mathieu::sum_factorial_power(1e-3, 0, state.range(0)).sum);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CallbackSerial(benchmark::State& state) {
  const mathieu::TermFn f = [](std::int64_t n) { return 1.0 / (1.0 + static_cast<double>(n) * n); };
  for (auto _ : state) benchmark::DoNotOptimize(mathieu::sum_terms_serial(f, 0, state.range(0)).sum);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CallbackParallel(benchmark::State& state) {
  const mathieu::TermFn f = [](std::int64_t n) { return 1.0 / (1.0 + static_cast<double>(n) * n); };
  for (auto _ : state) benchmark::DoNotOptimize(mathieu::sum_terms(f, 0, state.range(0)).sum);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_PowerLogSerial)->RangeMultiplier(16)->Range(1 << 14, 1 << 22)->UseRealTime();
BENCHMARK(BM_PowerLogParallel)->RangeMultiplier(16)->Range(1 << 14, 1 << 22)->UseRealTime();
BENCHMARK(BM_FactorialPowerSerial)->RangeMultiplier(16)->Range(1 << 14, 1 << 22)->UseRealTime();
BENCHMARK(BM_FactorialPowerParallel)->RangeMultiplier(16)->Range(1 << 14, 1 << 22)->UseRealTime();
BENCHMARK(BM_CallbackSerial)->RangeMultiplier(16)->Range(1 << 14, 1 << 22)->UseRealTime();
BENCHMARK(BM_CallbackParallel)->RangeMultiplier(16)->Range(1 << 14, 1 << 22)->UseRealTime();

BENCHMARK_MAIN();
