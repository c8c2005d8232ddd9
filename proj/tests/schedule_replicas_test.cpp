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

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "amfd/replicas.hpp"
#include "amfd/schedule.hpp"
#include "support/test_support.hpp"

namespace amfd {
namespace {

TEST(Schedule, MidpointHandValue) {
  EXPECT_DOUBLE_EQ(temperature(linear_schedule(0.3, 0.0, 3), 2), 0.15);
}

TEST(Schedule, EndpointsExact) {
  testing::Gen g(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Schedule s = linear_schedule(g.Uniform(0, 2), g.Uniform(0, 2), g.Int(2, 5000));
    EXPECT_EQ(temperature(s, 1), s.t_init);
    EXPECT_EQ(temperature(s, s.n_step), s.t_fin);
  }
}

TEST(Schedule, LinearSteps) {
  const Schedule s = linear_schedule(1.0, 0.0, 11);
  for (std::size_t t = 1; t <= 11; ++t) {
    EXPECT_NEAR(temperature(s, t), 1.0 - 0.1 * static_cast<double>(t - 1), 1e-15);
  }
}

TEST(Schedule, SingleStepReturnsInitial) {
  EXPECT_EQ(temperature(linear_schedule(0.7, 0.1, 1), 1), 0.7);
}

TEST(Schedule, RejectsBadInput) {
  EXPECT_THROW(linear_schedule(0.3, 0.0, 0), std::invalid_argument);
  EXPECT_THROW(linear_schedule(-0.1, 0.0, 5), std::invalid_argument);
  const Schedule s = linear_schedule(0.3, 0.0, 5);
  EXPECT_THROW(temperature(s, 0), std::out_of_range);
  EXPECT_THROW(temperature(s, 6), std::out_of_range);
}

TEST(Schedule, Presets) {
  EXPECT_EQ(preset_steps(StepPreset::kShort, 784), 784u);
  EXPECT_EQ(preset_steps(StepPreset::kMedium, 784), 7840u);
  EXPECT_EQ(preset_steps(StepPreset::kLong, 784), 78400u);
  for (auto p : {StepPreset::kShort, StepPreset::kMedium, StepPreset::kLong}) {
    EXPECT_EQ(parse_step_preset(step_preset_name(p)), p);
  }
  EXPECT_FALSE(parse_step_preset("huge").has_value());
}

TEST(Replicas, SeedsDistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (std::size_t k = 0; k < 10000; ++k) seen.insert(replica_seed(42, k));
  EXPECT_EQ(seen.size(), 10000u);
  EXPECT_EQ(replica_seed(42, 7), replica_seed(42, 7));
  EXPECT_NE(replica_seed(42, 7), replica_seed(43, 7));
}

TEST(Replicas, Uniform01InRange) {
  Rng rng(1);
  for (int k = 0; k < 100000; ++k) {
    const double u = uniform01(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

ReplicaResult FakeReplica(std::size_t, std::uint64_t seed) {
  ReplicaResult r;
  r.energy = static_cast<double>(seed % 1000);
  r.spins = {static_cast<std::uint8_t>(seed & 1)};
  return r;
}

TEST(Replicas, IndependentOfThreadCount) {
  const SolveResult one = run_replicas({100, 9, 1}, FakeReplica);
  for (std::size_t threads : {2u, 4u, 0u}) {
    const SolveResult many = run_replicas({100, 9, threads}, FakeReplica);
    EXPECT_EQ(many.best_energy, one.best_energy);
    EXPECT_EQ(many.best_replica, one.best_replica);
    ASSERT_EQ(many.per_replica.size(), 100u);
    for (std::size_t k = 0; k < 100; ++k) {
      EXPECT_EQ(many.per_replica[k].index, k);
      EXPECT_EQ(many.per_replica[k].seed, replica_seed(9, k));
      EXPECT_EQ(many.per_replica[k].energy, one.per_replica[k].energy);
    }
  }
}

TEST(Replicas, SingleReplicaUsesDerivedSeed) {
  const SolveResult r = run_replicas({1, 5, 1}, FakeReplica);
  EXPECT_EQ(r.per_replica[0].seed, replica_seed(5, 0));
  EXPECT_EQ(r.best_energy, FakeReplica(0, replica_seed(5, 0)).energy);
}

TEST(Replicas, AggregateTiesBreakByLowestIndex) {
  std::vector<ReplicaResult> rs(4);
  const double energies[] = {3, 1, 1, 2};
  for (std::size_t k = 0; k < 4; ++k) {
    rs[k].index = 3 - k;  // shuffled order
    rs[k].energy = energies[3 - k];
  }
  const SolveResult s = aggregate_replicas(rs);
  EXPECT_EQ(s.best_replica, 1u);
  EXPECT_EQ(s.best_energy, 1.0);
  EXPECT_DOUBLE_EQ(s.mean_energy, 7.0 / 4.0);
  EXPECT_GE(s.mean_energy, s.best_energy);
}

TEST(Replicas, PropagatesExceptions) {
  auto failing = [](std::size_t index, std::uint64_t) -> ReplicaResult {
    if (index == 13) throw std::runtime_error("boom");
    return ReplicaResult{};
  };
  EXPECT_THROW(run_replicas({32, 0, 4}, failing), std::runtime_error);
}

TEST(Replicas, BatchesFollowWidthNotThreads) {
  std::vector<std::size_t> firsts;
  auto batch = [&](std::size_t first, std::span<const std::uint64_t> seeds) {
    firsts.push_back(first);
    return std::vector<ReplicaResult>(seeds.size());
  };
  run_replica_batches({37, 0, 1}, 16, batch);
  EXPECT_EQ(firsts, (std::vector<std::size_t>{0, 16, 32}));
  EXPECT_THROW(run_replicas({0, 0, 1}, FakeReplica), std::invalid_argument);
}

}  // namespace
}  // namespace amfd
