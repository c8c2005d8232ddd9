// Copyright 2026 The AMFD Authors
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

#include <cmath>
#include <random>
#include <vector>

#include "amfd/problems.hpp"
#include "amfd/qubo.hpp"
#include "amfd/solvers.hpp"

namespace amfd {
namespace {

WeightedGraph RandomGraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 1; u < n; ++u) {
    for (std::size_t v = 0; v < u; ++v) {
      if (coin(rng)) edges.push_back(Edge{u, v, 1.0});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

// Gset-like sparsity at 800 vertices is ~6%; the dense case mirrors the
// penalty-heavy encodings.
void BM_MeanFieldLanes(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const double density = state.range(1) / 100.0;
  const QuboModel m = normalize(build_mcp(RandomGraph(n, density, 1)).model);
  constexpr std::size_t kLanes = 16;
  std::vector<double> x(n * kLanes, 0.5), phi(n * kLanes);
  for (auto _ : state) {
    mean_field_lanes(m, x, kLanes, phi);
    benchmark::DoNotOptimize(phi.data());
  }
  state.SetItemsProcessed(state.iterations() * kLanes);
}
BENCHMARK(BM_MeanFieldLanes)->Args({800, 6})->Args({800, 50})->Args({1024, 100});

void BM_AmfdStep(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const QuboModel m = normalize(build_mcp(RandomGraph(n, 0.06, 2)).model);
  std::vector<double> prev(n, 0.4), curr(n, 0.6);
  for (auto _ : state) {
    auto next = amfd_step(m, curr, prev, 0.2, 0.1, 1.0);
    benchmark::DoNotOptimize(next.data());
  }
}
BENCHMARK(BM_AmfdStep)->Arg(800)->Arg(2000);

void BM_AmfdSolve(benchmark::State& state) {
  const QuboModel m = build_mcp(RandomGraph(800, 0.06, 3)).model;
  AmfdParams p;
  p.zeta = 5.0;
  p.schedule = linear_schedule(0.3, 0.0, 800);
  p.n_replicas = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(amfd_solve(m, p).best_energy);
}
BENCHMARK(BM_AmfdSolve)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_BuildTsp(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  SquareMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) d(i, j) = d(j, i) = std::floor(u(rng));
  }
  const TspInstance inst(d);
  for (auto _ : state) benchmark::DoNotOptimize(build_tsp(inst).model.n_spin());
}
BENCHMARK(BM_BuildTsp)->Arg(29)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_BuildGcp(benchmark::State& state) {
  const WeightedGraph g = RandomGraph(state.range(0), 0.1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(build_gcp(g).model.n_spin());
}
BENCHMARK(BM_BuildGcp)->Arg(47)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace amfd

BENCHMARK_MAIN();
