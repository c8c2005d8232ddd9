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

// Independent solver replicas: seed derivation, a small worker pool and
// deterministic aggregation.

#ifndef AMFD_REPLICAS_HPP_
#define AMFD_REPLICAS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "amfd/qubo.hpp"

namespace amfd {

// Replica k's seed depends only on (master_seed, k): a splitmix64 finalizer
// applied to the k-th point of a Weyl sequence started at master_seed.
std::uint64_t replica_seed(std::uint64_t master_seed, std::size_t replica_index);

// Generator used by every solver.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct ReplicaResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  SpinVector spins;
  double energy = 0.0;
  // Energy of the rounded state every `trajectory_stride` steps, when enabled.
  std::vector<double> trajectory;
};

struct SolveResult {
  SpinVector best_spins;
  double best_energy = 0.0;
  std::size_t best_replica = 0;
  double mean_energy = 0.0;
  // Ordered by replica index.
  std::vector<ReplicaResult> per_replica;
};

struct ReplicaOptions {
  std::size_t n_replicas = 1;
  std::uint64_t seed = 0;
  // 0 picks std::thread::hardware_concurrency().
  std::size_t n_threads = 0;
};

// Runs fn(index, seed) for every replica on up to n_threads workers.
using ReplicaFn = std::function<ReplicaResult(std::size_t, std::uint64_t)>;
SolveResult run_replicas(const ReplicaOptions& options, const ReplicaFn& fn);

// Groups replicas [b*width, (b+1)*width) into batches handed to fn(first,
// seeds); fn returns one result per seed. Batch boundaries depend only on
// `width`, never on the thread count.
using ReplicaBatchFn = std::function<std::vector<ReplicaResult>(
    std::size_t, std::span<const std::uint64_t>)>;
SolveResult run_replica_batches(const ReplicaOptions& options,
                                std::size_t width, const ReplicaBatchFn& fn);

// Best = lowest energy, ties broken by lowest replica index.
SolveResult aggregate_replicas(std::vector<ReplicaResult> results);

}  // namespace amfd

#endif  // AMFD_REPLICAS_HPP_
