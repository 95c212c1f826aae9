// Copyright 2026 The overlap-forge Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "overlap_forge/protocol_sim.h"
#include "overlap_forge/solve.h"
#include "overlap_forge/sweep.h"
#include "overlap_forge/synthesis.h"

namespace overlap_forge {
namespace {

SimulationConfig worked_config(std::uint64_t shots) {
  const MappingProblem p{InnerProduct(0.3, 0.0), InnerProduct(0.5, 0.6 * kPi),
                         InnerProduct(1.0, 1.1 * kPi), PriorPair(0.65, 0.35)};
  SimulationConfig c;
  c.problem = p;
  c.solution = solve(p);
  c.synthesis = synthesize(p, c.solution);
  c.shots = shots;
  c.seed = 1;
  return c;
}

void BM_SimulateSerial(benchmark::State& state) {
  const SimulationConfig c = worked_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_serial(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateSerial)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);

void BM_SimulateParallel(benchmark::State& state) {
  const SimulationConfig c = worked_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_parallel(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateParallel)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);

void sweep_bench(benchmark::State& state, FigureId id, Execution ex) {
  const SweepSpec spec{id, static_cast<int>(state.range(0)), {}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, ex));
}
BENCHMARK_CAPTURE(sweep_bench, fig1b_serial, FigureId::kFig1b, Execution::kSerial)
    ->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_bench, fig1b_parallel, FigureId::kFig1b, Execution::kParallel)
    ->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_bench, fig3a_serial, FigureId::kFig3a, Execution::kSerial)
    ->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_bench, fig3a_parallel, FigureId::kFig3a, Execution::kParallel)
    ->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_RealCaseOptimize(benchmark::State& state) {
  const RealCaseProblem p(1.0 / 6, 1.0 / 3, 2.0 / 3, PriorPair(0.3, 0.7));
  for (auto _ : state) benchmark::DoNotOptimize(optimize(p));
}
BENCHMARK(BM_RealCaseOptimize);

}  // namespace
}  // namespace overlap_forge

BENCHMARK_MAIN();
