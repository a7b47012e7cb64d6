// Copyright 2026 The mubgame Authors
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

#include "mubgame/game.hpp"
#include "mubgame/linalg.hpp"
#include "mubgame/optimize.hpp"
#include "mubgame/search.hpp"

namespace {

using namespace mubgame;

void BM_HermitianEigen(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  ComplexMatrix m = random_density_hs(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen)->Arg(3)->Arg(7)->Arg(13)->Arg(49);

void BM_GuessingProbability(benchmark::State& state) {
  const PrimeDim d(state.range(0));
  const MubSet set = dpp_set(d);
  const Strategy s = perfect_strategy(set).strategy;
  for (auto _ : state) benchmark::DoNotOptimize(guessing_probability(set, s, CoinKind::quantum));
}
BENCHMARK(BM_GuessingProbability)->Arg(3)->Arg(7)->Arg(13);

void BM_OptimalMeasurement(benchmark::State& state) {
  const PrimeDim d(state.range(0));
  const auto ops = discrimination_operators(random_density_hs(d.size(), 3), wf_set(d));
  for (auto _ : state) benchmark::DoNotOptimize(solve_measurement(ops));
}
BENCHMARK(BM_OptimalMeasurement)->Arg(3)->Arg(5)->Arg(7);

void BM_SeesawRestart(benchmark::State& state) {
  const PrimeDim d(state.range(0));
  const MubSet set = wf_set(d);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(seesaw_restart(set, CoinKind::quantum, seed++, 1e-6, 500));
}
BENCHMARK(BM_SeesawRestart)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ClassicalExhaustive(benchmark::State& state) {
  const MubSet set = wf_set(PrimeDim(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classical_exhaustive(set, {}, 1));
}
BENCHMARK(BM_ClassicalExhaustive)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
