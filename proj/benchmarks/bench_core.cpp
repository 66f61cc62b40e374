// Copyright 2026 The dilkit Authors
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

#include <benchmark/benchmark.h>

#include <array>

#include "dilkit/instances.hpp"
#include "dilkit/schur.hpp"
#include "dilkit/verify.hpp"

namespace {

using namespace dilkit;

void BM_PartialTrace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Matrix rho = random_density(d * d, 1);
  const FactoredDims dims{d, d};
  const std::array<int, 1> keep{0};
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, dims, keep));
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_ChannelOfDilation(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Dilation dil = haar_dilation(d, d, 2);
  const Tolerance tol;
  for (auto _ : state) benchmark::DoNotOptimize(channel_of_dilation(dil, tol));
}
BENCHMARK(BM_ChannelOfDilation)->Arg(2)->Arg(4)->Arg(6);

void BM_CatalyticCheck(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Dilation dil = random_mixed_unitary(d, 3, 3).dilation();
  const Tolerance tol;
  for (auto _ : state) benchmark::DoNotOptimize(catalytic_check(dil, tol));
}
BENCHMARK(BM_CatalyticCheck)->Arg(2)->Arg(3)->Arg(4);

void BM_BuildSchurDilation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SchurMatrix x = random_gram_schur(n, 4, 4);
  const Tolerance tol;
  for (auto _ : state) benchmark::DoNotOptimize(build_schur_dilation(x, tol));
}
BENCHMARK(BM_BuildSchurDilation)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
