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

#include "amfd/solvers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amfd/mf_math.hpp"
#include "amfd/problems.hpp"
#include "support/test_support.hpp"

namespace amfd {
namespace {

using testing::Gen;

QuboModel Triangle() {
  return build_mcp(WeightedGraph(3, {{1, 0, 1}, {2, 1, 1}, {2, 0, 1}})).model;
}

// On the unit triangle x = 0.5 gives a mean field of exactly zero, so the
// noiseless logistic updates sit on that point forever. Uneven weights break
// the tie; the best cut is 1.25 + 1 and the energies stay dyadic.
QuboModel SkewTriangle() {
  return build_mcp(WeightedGraph(3, {{1, 0, 1}, {2, 1, 1.25}, {2, 0, 0.75}})).model;
}

TEST(AmfdInit, HandValues) {
  // Draw the same uniforms the initializer will see.
  Rng probe(99);
  const double u0 = uniform01(probe), u1 = uniform01(probe);
  Rng rng(99);
  const AmfdState s = amfd_init(2, 0.1, rng);
  EXPECT_EQ(s.prev[0], u0);
  EXPECT_EQ(s.prev[1], u1);
  EXPECT_DOUBLE_EQ(s.curr[0], u0 - 0.1 * (u0 - 0.5));
}

TEST(AmfdInit, CenterIsFixedAndEdgeValues) {
  // prev = 0.9, eta = 0.1 -> 0.86; prev = 1, eta = 0.2 -> 0.9; 0.5 stays.
  EXPECT_NEAR(0.9 - 0.1 * (0.9 - 0.5), 0.86, 1e-15);
  Gen g(41);
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(g.Int(0, 1u << 30));
    const double eta = g.Uniform(0.001, 1.0);
    const AmfdState s = amfd_init(20, eta, rng);
    for (std::size_t i = 0; i < 20; ++i) {
      ASSERT_GE(s.prev[i], 0.0);
      ASSERT_LE(s.prev[i], 1.0);
      EXPECT_NEAR(s.curr[i], s.prev[i] - eta * (s.prev[i] - 0.5), 1e-15);
      // Moves toward the center.
      EXPECT_LE(std::fabs(s.curr[i] - 0.5), std::fabs(s.prev[i] - 0.5) + 1e-15);
    }
  }
}

TEST(AmfdStep, SymmetricPointIsStationary) {
  const QuboModel m(2, {0, 0, 0, 0}, {0, 0});
  const std::vector<double> x{0.5, 0.5};
  const auto next = amfd_step(m, x, x, 0.3, 0.1, 5.0);
  EXPECT_EQ(next, x);
}

TEST(AmfdStep, SingleSpinHandTrace) {
  const QuboModel m(1, {0}, {1});
  const auto next = amfd_step(m, std::vector<double>{0.5}, std::vector<double>{0.5}, 0.3, 0.1, 5);
  EXPECT_NEAR(next[0], 0.4, 1e-12);
}

TEST(AmfdStep, BoundarySkipsMeanField) {
  const QuboModel m(1, {0}, {-50});
  const auto next = amfd_step(m, std::vector<double>{1.0}, std::vector<double>{1.0}, 0.3, 0.1, 0);
  EXPECT_NEAR(next[0], 0.985, 1e-12);
}

TEST(AmfdStep, ForwardPointFeedsOnlyTheMeanField) {
  // N = 2, Q_01 = 1, h = 0. curr = (0.6, 0.4), prev = (0.5, 0.5), zeta = 2:
  // fwd = (0.8, 0.2), phi = (0.2, 0.8).
  const QuboModel m(2, {0, 1, 1, 0}, {0, 0});
  const auto next = amfd_step(m, std::vector<double>{0.6, 0.4},
                              std::vector<double>{0.5, 0.5}, 0.5, 0.1, 2.0);
  EXPECT_NEAR(next[0], 2 * 0.6 - 0.5 - 0.1 * 0.5 * 0.1 - 0.1 * 0.2, 1e-15);
  EXPECT_NEAR(next[1], 2 * 0.4 - 0.5 + 0.1 * 0.5 * 0.1 - 0.1 * 0.8, 1e-15);
}

TEST(AmfdStep, StaysInBox) {
  Gen g(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = g.Int(1, 15);
    const QuboModel m = testing::RandomModel(g, n, 0.6, 5.0);
    std::vector<double> prev(n), curr(n);
    for (std::size_t i = 0; i < n; ++i) {
      prev[i] = g.Coin(0.2) ? double(g.Int(0, 1)) : g.Uniform(0, 1);
      curr[i] = g.Coin(0.2) ? double(g.Int(0, 1)) : g.Uniform(0, 1);
    }
    for (double v : amfd_step(m, curr, prev, g.Uniform(0, 2), g.Uniform(0.001, 2), g.Uniform(0, 20))) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
}

// With zeta = 0 and x* an interior zero of the scaled gradient, x* is a
// fixed point of the step.
TEST(AmfdStep, ScaledGradientZerosAreFixedPoints) {
  Gen g(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = g.Int(1, 12);
    const QuboModel base = testing::RandomModel(g, n);
    const auto x = testing::RandomInterior(g, n, 0.1);
    const double t = g.Uniform(0.05, 2.0);
    const auto field = testing::OracleField(QuboModel(n, std::vector<double>(base.q_dense().begin(), base.q_dense().end()),
                                                      std::vector<double>(n, 0.0)),
                                            x);
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = -t * (x[i] - 0.5) - field[i];
    const QuboModel m(n, std::vector<double>(base.q_dense().begin(), base.q_dense().end()), h);
    const auto next = amfd_step(m, x, x, t, g.Uniform(0.01, 0.5), 0.0);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(next[i], x[i], 1e-12);
  }
}

// Q = 0 and |h_i| > T/2: the surrogate T/2 (x - 0.5)^2 + h x has its
// minimizer outside the box, so every coordinate heads for a face and the
// surrogate falls at every step until the first clamp.
TEST(AmfdStep, DescendsOnSeparableSurrogateUntilClamp) {
  Gen g(44);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = g.Int(1, 10);
    const double t = g.Uniform(0.0, 1.0);
    std::vector<double> h(n);
    for (double& v : h) v = (g.Coin() ? 1 : -1) * g.Uniform(t / 2 + 0.1, 2.0);
    const QuboModel m(n, std::vector<double>(n * n, 0.0), h);
    auto surrogate = [&](const std::vector<double>& x) {
      double f = 0.0;
      for (std::size_t i = 0; i < n; ++i) f += 0.5 * t * (x[i] - 0.5) * (x[i] - 0.5) + h[i] * x[i];
      return f;
    };
    Rng rng(trial);
    const double eta = g.Uniform(0.001, 0.05);
    AmfdState s = amfd_init(n, eta, rng);
    // First step turns any opposing initial velocity around.
    auto next = amfd_step(m, s.curr, s.prev, t, eta, 0.0);
    s.prev = s.curr;
    s.curr = next;
    for (int step = 0; step < 10000; ++step) {
      next = amfd_step(m, s.curr, s.prev, t, eta, 0.0);
      const bool clamped = std::any_of(next.begin(), next.end(),
                                       [](double v) { return v == 0.0 || v == 1.0; });
      if (clamped) break;
      ASSERT_LT(surrogate(next), surrogate(s.curr)) << "step " << step;
      s.prev = s.curr;
      s.curr = next;
    }
  }
}

TEST(AmfdStep, DimensionMismatchThrows) {
  const QuboModel m(2, {0, 1, 1, 0}, {0, 0});
  EXPECT_THROW(amfd_step(m, std::vector<double>{0.5}, std::vector<double>{0.5, 0.5}, 1, 0.1, 0),
               std::invalid_argument);
}

TEST(PmfaStep, HandValues) {
  Rng rng(0);
  const QuboModel zero(2, {0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(pmfa_step(zero, std::vector<double>{0.1, 0.9}, 1.0, 1.0, 0.0, rng),
            (std::vector<double>{0.5, 0.5}));
  const QuboModel m(2, {0, 2, 2, 0}, {1, -1});
  const std::vector<double> x{0.5, 0.5};
  const auto next = pmfa_step(m, x, 1.0, 0.5, 0.0, rng);
  EXPECT_NEAR(next[0], 0.25 + 0.5 / (1 + std::exp(2.0)), 1e-12);
  EXPECT_NEAR(next[0], 0.309601, 1e-6);
  EXPECT_NEAR(next[1], 0.5, 1e-15);
  EXPECT_EQ(pmfa_step(m, std::vector<double>{0.3, 0.7}, 1.0, 0.0, 0.0, rng),
            (std::vector<double>{0.3, 0.7}));
}

TEST(PmfaStep, NoiseIsSeededAndBounded) {
  Gen g(45);
  const QuboModel m = testing::RandomModel(g, 10);
  const auto x = testing::RandomInterior(g, 10);
  Rng a(5), b(5);
  const auto xa = pmfa_step(m, x, 0.5, 0.3, 0.2, a);
  EXPECT_EQ(xa, pmfa_step(m, x, 0.5, 0.3, 0.2, b));
  Rng c(5);
  EXPECT_NE(xa, pmfa_step(m, x, 0.5, 0.3, 0.0, c));
  for (double v : xa) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(PmfaStep, ConvergesToSelfConsistentPoint) {
  Gen g(46);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = g.Int(1, 12);
    const QuboModel m = testing::RandomModel(g, n, 0.7, 0.5);
    const double t = g.Uniform(1.0, 5.0);
    std::vector<double> x = testing::RandomInterior(g, n, 0.0);
    Rng rng(trial);
    for (int it = 0; it < 500; ++it) x = pmfa_step(m, x, t, 1.0, 0.0, rng);
    const auto phi = testing::OracleField(m, x);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_LE(std::fabs(x[i] - testing::Logistic(phi[i], t)), 1e-8);
    }
  }
}

TEST(AmfdSolve, TriangleReachesOptimalCut) {
  AmfdParams p;
  p.eta = 0.1;
  p.zeta = 0.0;
  p.schedule = linear_schedule(0.3, 0.0, 100);
  p.seed = 1;
  p.n_replicas = 8;
  const SolveResult r = amfd_solve(Triangle(), p);
  EXPECT_EQ(r.best_energy, -2.0);
  EXPECT_EQ(energy(Triangle(), r.best_spins), r.best_energy);
}

TEST(AmfdSolve, PathIndependentSet) {
  const WeightedGraph path(3, {{1, 0, 1}, {2, 1, 1}});
  AmfdParams p;
  p.eta = 0.05;
  p.schedule = linear_schedule(0.3, 0.0, 200);
  p.n_replicas = 8;
  const SolveResult r = amfd_solve(build_misp(path).model, p);
  EXPECT_EQ(r.best_energy, -2.0);
  EXPECT_EQ(r.best_spins, (SpinVector{1, 0, 1}));
}

TEST(AmfdSolve, ResultInvariants) {
  Gen g(47);
  const QuboModel m = testing::RandomModel(g, 30, 0.3, 1.0, 2.5);
  AmfdParams p;
  p.schedule = linear_schedule(0.3, 0.0, 60);
  p.n_replicas = 37;
  p.seed = 3;
  const SolveResult r = amfd_solve(m, p);
  ASSERT_EQ(r.per_replica.size(), 37u);
  double lo = INFINITY;
  for (const auto& rep : r.per_replica) {
    EXPECT_NEAR(rep.energy, testing::OracleEnergy(m, rep.spins), 1e-12);
    lo = std::min(lo, rep.energy);
  }
  EXPECT_EQ(r.best_energy, lo);
  EXPECT_EQ(energy(m, r.best_spins), r.best_energy);
  EXPECT_GE(r.mean_energy, r.best_energy);
}

// Each replica of the batched solver equals a hand-rolled single-replica
// loop over the public step function.
TEST(AmfdSolve, BatchedReplicasMatchScalarLoop) {
  Gen g(48);
  const QuboModel m = testing::RandomModel(g, 23, 0.5, 4.0);
  AmfdParams p;
  p.eta = 0.07;
  p.zeta = 3.0;
  p.schedule = linear_schedule(0.4, 0.0, 50);
  p.n_replicas = 19;
  p.seed = 77;
  const SolveResult r = amfd_solve(m, p);
  const QuboModel norm = normalize(m);
  for (std::size_t k : {0u, 15u, 16u, 18u}) {
    Rng rng(replica_seed(p.seed, k));
    AmfdState s = amfd_init(m.n_spin(), p.eta, rng);
    for (std::size_t t = 1; t <= p.schedule.n_step; ++t) {
      auto next = amfd_step(norm, s.curr, s.prev, temperature(p.schedule, t), p.eta, p.zeta);
      s.prev = std::move(s.curr);
      s.curr = std::move(next);
    }
    EXPECT_EQ(r.per_replica[k].spins, round_to_binary(s.curr)) << "replica " << k;
  }
}

TEST(AmfdSolve, DeterministicAcrossThreadCounts) {
  Gen g(49);
  const QuboModel m = testing::RandomModel(g, 40, 0.2);
  AmfdParams p;
  p.schedule = linear_schedule(0.3, 0.0, 40);
  p.n_replicas = 50;
  p.seed = 12;
  p.n_threads = 1;
  const SolveResult one = amfd_solve(m, p);
  for (std::size_t threads : {3u, 0u}) {
    p.n_threads = threads;
    const SolveResult other = amfd_solve(m, p);
    EXPECT_EQ(other.best_energy, one.best_energy);
    for (std::size_t k = 0; k < 50; ++k) {
      EXPECT_EQ(other.per_replica[k].spins, one.per_replica[k].spins);
    }
  }
}

TEST(AmfdSolve, TrajectoryStride) {
  AmfdParams p;
  p.schedule = linear_schedule(0.3, 0.0, 100);
  p.n_replicas = 3;
  p.trajectory_stride = 10;
  const SolveResult r = amfd_solve(Triangle(), p);
  for (const auto& rep : r.per_replica) {
    ASSERT_EQ(rep.trajectory.size(), 10u);
    EXPECT_EQ(rep.trajectory.back(), rep.energy);
  }
}

TEST(AmfdSolve, RejectsBadParameters) {
  AmfdParams p;
  p.schedule = linear_schedule(0.3, 0.0, 10);
  p.eta = 0.0;
  EXPECT_THROW(amfd_solve(Triangle(), p), std::invalid_argument);
  p.eta = 0.1;
  p.zeta = -1;
  EXPECT_THROW(amfd_solve(Triangle(), p), std::invalid_argument);
  p.zeta = 0;
  p.n_replicas = 0;
  EXPECT_THROW(amfd_solve(Triangle(), p), std::invalid_argument);
  p.n_replicas = 1;
  p.schedule.n_step = 0;
  EXPECT_THROW(amfd_solve(Triangle(), p), std::invalid_argument);
  p.schedule.n_step = 10;
  EXPECT_THROW(amfd_solve(QuboModel(2, {0, 0, 0, 0}, {0, 0}), p), std::domain_error);
}

TEST(MfaSolve, SingleBiasedSpinSaturates) {
  SerialMfaParams p;
  p.schedule = linear_schedule(1.0, 0.01, 500);
  const SolveResult r = mfa_solve(QuboModel(1, {0}, {-1}), p);
  EXPECT_EQ(r.best_spins, SpinVector{1});
}

TEST(MfaSolve, TriangleBestOf32) {
  SerialMfaParams p;
  p.schedule = linear_schedule(1.0, 0.01, 3000);
  p.n_replicas = 32;
  EXPECT_EQ(mfa_solve(SkewTriangle(), p).best_energy, -2.25);
}

// At the end of a long anneal toward zero temperature no single flip of the
// rounded output lowers the energy.
TEST(MfaSolve, EndsAtSingleFlipLocalMinimum) {
  Gen g(50);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = g.Int(2, 12);
    const QuboModel m = testing::RandomModel(g, n, 0.8, 1.0);
    SerialMfaParams p;
    p.schedule = linear_schedule(1.0, 0.0, 4000);
    p.seed = trial;
    p.n_replicas = 4;
    const SolveResult r = mfa_solve(m, p);
    for (const auto& rep : r.per_replica) {
      const double e = testing::OracleEnergy(m, rep.spins);
      for (std::size_t i = 0; i < n; ++i) {
        SpinVector f = rep.spins;
        f[i] ^= 1;
        EXPECT_GE(testing::OracleEnergy(m, f), e - 1e-12) << "trial " << trial << " spin " << i;
      }
    }
  }
}

TEST(PmfaSolve, BatchedReplicasMatchScalarLoop) {
  Gen g(51);
  const QuboModel m = testing::RandomModel(g, 17, 0.6, 2.0);
  MfaParams p;
  p.schedule = linear_schedule(0.5, 0.01, 40);
  p.alpha = 0.3;
  p.sigma = 0.05;
  p.n_replicas = 18;
  p.seed = 5;
  const SolveResult r = pmfa_solve(m, p);
  const QuboModel norm = normalize(m);
  for (std::size_t k : {0u, 7u, 17u}) {
    Rng rng(replica_seed(p.seed, k));
    std::vector<double> x(m.n_spin());
    for (double& v : x) v = uniform01(rng);
    for (std::size_t t = 1; t <= p.schedule.n_step; ++t) {
      x = pmfa_step(norm, x, temperature(p.schedule, t), p.alpha, p.sigma, rng);
    }
    EXPECT_EQ(r.per_replica[k].spins, round_to_binary(x)) << "replica " << k;
  }
}

TEST(PmfaSolve, TriangleAndValidation) {
  MfaParams p;
  p.schedule = linear_schedule(0.5, 0.001, 300);
  p.alpha = 0.5;
  p.n_replicas = 16;
  EXPECT_EQ(pmfa_solve(SkewTriangle(), p).best_energy, -2.25);
  p.sigma = 0.05;
  EXPECT_EQ(pmfa_solve(Triangle(), p).best_energy, -2.0);
  p.alpha = 0.0;
  EXPECT_THROW(pmfa_solve(Triangle(), p), std::invalid_argument);
  p.alpha = 1.5;
  EXPECT_THROW(pmfa_solve(Triangle(), p), std::invalid_argument);
  p.alpha = 1.0;
  p.sigma = -1.0;
  EXPECT_THROW(pmfa_solve(Triangle(), p), std::invalid_argument);
}

}  // namespace
}  // namespace amfd
