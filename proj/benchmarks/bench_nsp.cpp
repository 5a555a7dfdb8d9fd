// Copyright 2026 The nsp Authors
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

#include <random>

#include "nsp/anneal.hpp"
#include "nsp/exact.hpp"
#include "nsp/nsp_model.hpp"
#include "nsp/tabu.hpp"

namespace {

nsp::BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
  nsp::BitVector b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1U);
  return b;
}

void BM_QuboEnergy(benchmark::State& state) {
  const auto q = nsp::build_qubo(nsp::make_paper_base(4, static_cast<std::size_t>(state.range(0))));
  std::mt19937_64 rng(1);
  const auto x = random_bits(q.num_vars(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(nsp::energy(q, x));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_QuboEnergy)->Arg(10)->Arg(40)->Arg(160);

void BM_IsingEnergy(benchmark::State& state) {
  const auto p = nsp::to_ising(nsp::build_qubo(nsp::make_paper_base(4, static_cast<std::size_t>(state.range(0)))));
  std::mt19937_64 rng(2);
  const auto s = random_bits(p.num_vars(), rng).to_spins();
  for (auto _ : state) benchmark::DoNotOptimize(nsp::energy(p, s));
}
BENCHMARK(BM_IsingEnergy)->Arg(10)->Arg(40)->Arg(160);

void BM_ExactEnumeration(benchmark::State& state) {
  const auto q = nsp::build_qubo(nsp::make_paper_base(2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nsp::enumerate_ground_states(q));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << q.num_vars()));
}
BENCHMARK(BM_ExactEnumeration)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_MetropolisSweeps(benchmark::State& state) {
  const auto p = nsp::to_ising(nsp::build_qubo(nsp::make_paper_base(3, static_cast<std::size_t>(state.range(0)))));
  auto sched = nsp::AnnealSchedule::forward_default(3);
  sched.total_sweeps = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(nsp::forward_anneal(p, sched, 10));
  state.SetItemsProcessed(state.iterations() * 10 * 1000);  // sweeps
}
BENCHMARK(BM_MetropolisSweeps)->Arg(5)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TabuSolve(benchmark::State& state) {
  const auto q = nsp::build_qubo(nsp::make_paper_base(4, static_cast<std::size_t>(state.range(0))));
  nsp::TabuConfig cfg;
  cfg.seed = 4;
  for (auto _ : state) benchmark::DoNotOptimize(nsp::tabu_solve(q, cfg));
}
BENCHMARK(BM_TabuSolve)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_DecomposeSolve(benchmark::State& state) {
  const auto q = nsp::build_qubo(nsp::make_paper_base(4, 160));
  nsp::TabuConfig cfg;
  cfg.seed = 5;
  cfg.target_energy = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(nsp::decompose_solve(q, cfg));
}
BENCHMARK(BM_DecomposeSolve)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
