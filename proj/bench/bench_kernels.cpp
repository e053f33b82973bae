// Copyright 2026 The coxwall Authors
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

// Serial reference against the OpenMP kernels. Arg 0 is serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "coxwall/automorphisms.hpp"
#include "coxwall/catalog.hpp"
#include "coxwall/complexes.hpp"
#include "coxwall/walls.hpp"

using namespace coxwall;

namespace {

const CoxeterSystem& K33() {
  static const CoxeterSystem sys = NewSystem(catalog::KThreeThree(3));
  return sys;
}

Exec ExecOf(const benchmark::State& state) { return state.range(0) ? Exec::kParallel : Exec::kSerial; }

void BM_Ball(benchmark::State& state) {
  BallOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateBall(K33(), 7, o).size());
}

void BM_AxiomM(benchmark::State& state) {
  const CayleyBall ball = EnumerateBall(K33(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(CheckAxiomM(ball, ExecOf(state)).pairs_checked);
}

void BM_WallspaceGraph(benchmark::State& state) {
  const CayleyBall ball = EnumerateBall(K33(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(WallspaceGraph(ball, ExecOf(state)).matches);
}

void BM_WallFixing(benchmark::State& state) {
  const auto w = StarFixingAutomorphisms(K33()).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildWallFixingAutomorphism(K33(), w, 5, {}, ExecOf(state)).checks.all());
  }
}

}  // namespace

BENCHMARK(BM_Ball)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AxiomM)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WallspaceGraph)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WallFixing)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
