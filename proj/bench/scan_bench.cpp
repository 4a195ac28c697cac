// Copyright 2026 The psigraph Authors
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

#include "psigraph/parallel.hpp"
#include "psigraph/search.hpp"
#include "psigraph/theorems.hpp"

namespace {

using namespace psigraph;

void BM_ScanSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_pairs_serial("psi_p_div_psi_q", n).count);
  state.SetComplexityN(state.range(0));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_pairs("psi_p_div_psi_q", n).count);
  state.SetComplexityN(state.range(0));
  state.counters["threads"] = static_cast<double>(default_thread_count());
}

void BM_VerifyAbelianDivisible(benchmark::State& state) {
  VerifyParams params;
  params.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify("abelian-divisible", params).instances_checked);
}

BENCHMARK(BM_ScanSerial)->Arg(1000)->Arg(4000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(1000)->Arg(4000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAbelianDivisible)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
