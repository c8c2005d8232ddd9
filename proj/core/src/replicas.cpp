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

#include "amfd/replicas.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace amfd {
namespace {

std::uint64_t SplitMix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t ResolveThreads(std::size_t requested, std::size_t tasks) {
  std::size_t n = requested;
  if (n == 0) n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(n, tasks));
}

}  // namespace

std::uint64_t replica_seed(std::uint64_t master_seed, std::size_t replica_index) {
  constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  return SplitMix64(master_seed + kGolden * (static_cast<std::uint64_t>(replica_index) + 1));
}

SolveResult aggregate_replicas(std::vector<ReplicaResult> results) {
  if (results.empty()) throw std::invalid_argument("aggregate_replicas: no replicas");
  std::sort(results.begin(), results.end(),
            [](const ReplicaResult& a, const ReplicaResult& b) { return a.index < b.index; });
  SolveResult out;
  std::size_t best = 0;
  double sum = 0.0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    sum += results[k].energy;
    if (results[k].energy < results[best].energy) best = k;
  }
  out.best_spins = results[best].spins;
  out.best_energy = results[best].energy;
  out.best_replica = results[best].index;
  out.mean_energy = sum / static_cast<double>(results.size());
  out.per_replica = std::move(results);
  return out;
}

SolveResult run_replica_batches(const ReplicaOptions& options,
                                std::size_t width, const ReplicaBatchFn& fn) {
  if (options.n_replicas == 0) {
    throw std::invalid_argument("run_replicas: n_replicas must be at least 1");
  }
  if (width == 0) throw std::invalid_argument("run_replicas: batch width must be positive");

  const std::size_t n_batches = (options.n_replicas + width - 1) / width;
  std::vector<std::vector<ReplicaResult>> batch_results(n_batches);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= n_batches) return;
      const std::size_t first = b * width;
      const std::size_t count = std::min(width, options.n_replicas - first);
      std::vector<std::uint64_t> seeds(count);
      for (std::size_t k = 0; k < count; ++k) seeds[k] = replica_seed(options.seed, first + k);
      try {
        auto results = fn(first, seeds);
        if (results.size() != count) {
          throw std::logic_error("run_replicas: batch returned wrong result count");
        }
        for (std::size_t k = 0; k < count; ++k) {
          results[k].index = first + k;
          results[k].seed = seeds[k];
        }
        batch_results[b] = std::move(results);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n_batches);
        return;
      }
    }
  };

  const std::size_t n_threads = ResolveThreads(options.n_threads, n_batches);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ReplicaResult> all;
  all.reserve(options.n_replicas);
  for (auto& batch : batch_results) {
    for (auto& r : batch) all.push_back(std::move(r));
  }
  return aggregate_replicas(std::move(all));
}

SolveResult run_replicas(const ReplicaOptions& options, const ReplicaFn& fn) {
  return run_replica_batches(
      options, 1,
      [&fn](std::size_t first, std::span<const std::uint64_t> seeds) {
        return std::vector<ReplicaResult>{fn(first, seeds[0])};
      });
}

}  // namespace amfd
