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

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amfd/mf_math.hpp"

namespace amfd {
namespace {

// Replicas advanced together through one mean-field product.
constexpr std::size_t kLaneWidth = 16;

void CheckSchedule(const Schedule& s, const char* who) {
  if (s.n_step == 0) {
    throw std::invalid_argument(std::string(who) + ": n_step must be at least 1");
  }
  if (!(s.t_init >= 0.0) || !(s.t_fin >= 0.0)) {
    throw std::invalid_argument(std::string(who) + ": temperatures must be nonnegative");
  }
}

void CheckReplicas(std::size_t n, const char* who) {
  if (n == 0) throw std::invalid_argument(std::string(who) + ": n_replicas must be at least 1");
}

void CheckSize(std::size_t got, std::size_t want, const char* who) {
  if (got != want) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

// Spin j of lane r lives at j * lanes + r.
struct LaneBuffers {
  LaneBuffers(std::size_t n, std::size_t lanes)
      : n_spin(n), lanes(lanes), a(n * lanes), b(n * lanes), c(n * lanes),
        scratch(n * lanes), phi(n * lanes) {}

  std::size_t n_spin;
  std::size_t lanes;
  std::vector<double> a, b, c;
  std::vector<double> scratch;
  std::vector<double> phi;
};

MfVector ExtractLane(std::span<const double> x, std::size_t n, std::size_t lanes,
                     std::size_t r) {
  MfVector out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = x[j * lanes + r];
  return out;
}

void AmfdInitLanes(std::span<Rng> rngs, double eta, std::size_t n,
                   std::span<double> prev, std::span<double> curr) {
  const std::size_t lanes = rngs.size();
  for (std::size_t r = 0; r < lanes; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      const double p = uniform01(rngs[r]);
      prev[j * lanes + r] = p;
      curr[j * lanes + r] = std::clamp(p - eta * (p - 0.5), 0.0, 1.0);
    }
  }
}

// Writes the next AMFD state of every lane into `next`; fwd and phi are
// scratch of the same shape.
void AmfdStepLanes(const QuboModel& model, std::span<const double> curr,
                   std::span<const double> prev, std::span<double> next,
                   std::span<double> fwd, std::span<double> phi, std::size_t lanes,
                   double temperature, double eta, double zeta) {
  const std::size_t total = curr.size();
  for (std::size_t k = 0; k < total; ++k) {
    fwd[k] = curr[k] + zeta * (curr[k] - prev[k]);
  }
  mean_field_lanes(model, fwd, lanes, phi);
  for (std::size_t k = 0; k < total; ++k) {
    const double c = curr[k];
    const double entropy_grad = temperature * (c - 0.5);
    double v = 2.0 * c - prev[k] - eta * entropy_grad;
    if (c > 0.0 && c < 1.0) v -= eta * phi[k];
    if (v >= 1.0) v = 1.0;
    if (v <= 0.0) v = 0.0;
    next[k] = v;
  }
}

void PmfaStepLanes(const QuboModel& model, std::span<const double> x,
                   std::span<double> next, std::span<double> phi,
                   std::span<Rng> rngs, double temperature, double alpha,
                   double noise_std) {
  const std::size_t lanes = rngs.size();
  mean_field_lanes(model, x, lanes, phi);
  // One distribution per lane: normal_distribution caches half of each
  // generated pair, and a shared one would leak draws across replicas.
  std::vector<std::normal_distribution<double>> noise(
      noise_std > 0.0 ? lanes : 0, std::normal_distribution<double>(0.0, noise_std));
  const std::size_t n = model.n_spin();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < lanes; ++r) {
      const std::size_t k = j * lanes + r;
      double field = phi[k];
      if (noise_std > 0.0) field += noise[r](rngs[r]);
      next[k] = (1.0 - alpha) * x[k] + alpha * logistic_of_field(field, temperature);
    }
  }
}

double RoundedEnergy(const QuboModel& model, std::span<const double> x,
                     std::size_t lanes, std::size_t r) {
  const std::size_t n = model.n_spin();
  SpinVector s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = x[j * lanes + r] >= 0.5 ? 1 : 0;
  return energy(model, s);
}

std::vector<ReplicaResult> FinishLanes(const QuboModel& model,
                                       std::span<const double> x,
                                       std::size_t lanes,
                                       std::vector<std::vector<double>> trajectories) {
  std::vector<ReplicaResult> out(lanes);
  for (std::size_t r = 0; r < lanes; ++r) {
    out[r].spins = round_to_binary(ExtractLane(x, model.n_spin(), lanes, r));
    out[r].energy = energy(model, out[r].spins);
    out[r].trajectory = std::move(trajectories[r]);
  }
  return out;
}

void RecordTrajectory(const QuboModel& model, std::span<const double> x,
                      std::size_t lanes, std::size_t stride, std::size_t t,
                      std::vector<std::vector<double>>& traj) {
  if (stride == 0 || t % stride != 0) return;
  for (std::size_t r = 0; r < lanes; ++r) {
    traj[r].push_back(RoundedEnergy(model, x, lanes, r));
  }
}

}  // namespace

void validate(const AmfdParams& p) {
  CheckSchedule(p.schedule, "amfd");
  CheckReplicas(p.n_replicas, "amfd");
  if (!(p.eta > 0.0) || !std::isfinite(p.eta)) {
    throw std::invalid_argument("amfd: eta must be positive");
  }
  if (!(p.zeta >= 0.0) || !std::isfinite(p.zeta)) {
    throw std::invalid_argument("amfd: zeta must be nonnegative");
  }
}

void validate(const SerialMfaParams& p) {
  CheckSchedule(p.schedule, "mfa");
  CheckReplicas(p.n_replicas, "mfa");
}

void validate(const MfaParams& p) {
  CheckSchedule(p.schedule, "pmfa");
  CheckReplicas(p.n_replicas, "pmfa");
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) {
    throw std::invalid_argument("pmfa: alpha must lie in (0, 1]");
  }
  if (!(p.sigma >= 0.0) || !std::isfinite(p.sigma)) {
    throw std::invalid_argument("pmfa: sigma must be nonnegative");
  }
}

AmfdState amfd_init(std::size_t n_spin, double eta, Rng& rng) {
  AmfdState state{MfVector(n_spin), MfVector(n_spin)};
  AmfdInitLanes(std::span<Rng>(&rng, 1), eta, n_spin, state.prev, state.curr);
  return state;
}

MfVector amfd_step(const QuboModel& model_norm, std::span<const double> curr,
                   std::span<const double> prev, double temperature, double eta,
                   double zeta) {
  const std::size_t n = model_norm.n_spin();
  CheckSize(curr.size(), n, "amfd_step");
  CheckSize(prev.size(), n, "amfd_step");
  MfVector next(n), fwd(n), phi(n);
  AmfdStepLanes(model_norm, curr, prev, next, fwd, phi, 1, temperature, eta, zeta);
  return next;
}

SolveResult amfd_solve(const QuboModel& model, const AmfdParams& params) {
  validate(params);
  const QuboModel norm = normalize(model);
  const std::size_t n = model.n_spin();
  const Schedule& sched = params.schedule;

  auto batch = [&](std::size_t, std::span<const std::uint64_t> seeds) {
    const std::size_t lanes = seeds.size();
    std::vector<Rng> rngs;
    rngs.reserve(lanes);
    for (std::uint64_t s : seeds) rngs.emplace_back(s);
    LaneBuffers buf(n, lanes);
    std::vector<double>* prev = &buf.a;
    std::vector<double>* curr = &buf.b;
    std::vector<double>* next = &buf.c;
    AmfdInitLanes(rngs, params.eta, n, *prev, *curr);
    std::vector<std::vector<double>> traj(lanes);
    for (std::size_t t = 1; t <= sched.n_step; ++t) {
      AmfdStepLanes(norm, *curr, *prev, *next, buf.scratch, buf.phi, lanes,
                    temperature(sched, t), params.eta, params.zeta);
      std::swap(prev, curr);
      std::swap(curr, next);
      RecordTrajectory(model, *curr, lanes, params.trajectory_stride, t, traj);
    }
    return FinishLanes(model, *curr, lanes, std::move(traj));
  };
  return run_replica_batches(
      ReplicaOptions{params.n_replicas, params.seed, params.n_threads}, kLaneWidth,
      batch);
}

SolveResult mfa_solve(const QuboModel& model, const SerialMfaParams& params) {
  validate(params);
  const QuboModel anneal = params.normalize ? normalize(model) : model;
  const std::size_t n = model.n_spin();
  const Schedule& sched = params.schedule;
  const auto h = anneal.h();

  auto replica = [&](std::size_t, std::uint64_t seed) {
    Rng rng(seed);
    MfVector x(n);
    for (double& v : x) v = uniform01(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    ReplicaResult result;
    for (std::size_t t = 1; t <= sched.n_step; ++t) {
      const std::size_t i = pick(rng);
      double phi = h[i];
      const auto cols = anneal.row_columns(i);
      const auto vals = anneal.row_values(i);
      for (std::size_t k = 0; k < cols.size(); ++k) phi += vals[k] * x[cols[k]];
      x[i] = logistic_of_field(phi, temperature(sched, t));
      if (params.trajectory_stride != 0 && t % params.trajectory_stride == 0) {
        result.trajectory.push_back(energy(model, round_to_binary(x)));
      }
    }
    result.spins = round_to_binary(x);
    result.energy = energy(model, result.spins);
    return result;
  };
  return run_replicas(ReplicaOptions{params.n_replicas, params.seed, params.n_threads},
                      replica);
}

MfVector pmfa_step(const QuboModel& model, std::span<const double> x,
                   double temperature, double alpha, double noise_std, Rng& rng) {
  const std::size_t n = model.n_spin();
  CheckSize(x.size(), n, "pmfa_step");
  MfVector next(n), phi(n);
  PmfaStepLanes(model, x, next, phi, std::span<Rng>(&rng, 1), temperature, alpha,
                noise_std);
  return next;
}

SolveResult pmfa_solve(const QuboModel& model, const MfaParams& params) {
  validate(params);
  const QuboModel anneal = params.normalize ? normalize(model) : model;
  const std::size_t n = model.n_spin();
  const Schedule& sched = params.schedule;

  auto batch = [&](std::size_t, std::span<const std::uint64_t> seeds) {
    const std::size_t lanes = seeds.size();
    std::vector<Rng> rngs;
    rngs.reserve(lanes);
    for (std::uint64_t s : seeds) rngs.emplace_back(s);
    LaneBuffers buf(n, lanes);
    std::vector<double>* x = &buf.a;
    std::vector<double>* next = &buf.b;
    for (std::size_t r = 0; r < lanes; ++r) {
      for (std::size_t j = 0; j < n; ++j) (*x)[j * lanes + r] = uniform01(rngs[r]);
    }
    std::vector<std::vector<double>> traj(lanes);
    for (std::size_t t = 1; t <= sched.n_step; ++t) {
      PmfaStepLanes(anneal, *x, *next, buf.phi, rngs, temperature(sched, t),
                    params.alpha, params.sigma);
      std::swap(x, next);
      RecordTrajectory(model, *x, lanes, params.trajectory_stride, t, traj);
    }
    return FinishLanes(model, *x, lanes, std::move(traj));
  };
  return run_replica_batches(
      ReplicaOptions{params.n_replicas, params.seed, params.n_threads}, kLaneWidth,
      batch);
}

}  // namespace amfd
