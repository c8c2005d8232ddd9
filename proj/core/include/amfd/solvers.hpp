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

// Annealing solvers over a QuboModel:
//
//   * amfd_solve  - annealed mean field descent: accelerated descent on the
//                   temperature-scaled KL divergence, clamped to [0,1]^N.
//   * mfa_solve   - serial mean field annealing, one random spin per step.
//   * pmfa_solve  - parallel mean field annealing; with sigma > 0 Gaussian
//                   noise is added to the mean field (noisy MFA).
//
// Every solver runs independent replicas, rounds the final mf-spins at 0.5
// and scores them on the model it was given (never the normalized copy).

#ifndef AMFD_SOLVERS_HPP_
#define AMFD_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "amfd/qubo.hpp"
#include "amfd/replicas.hpp"
#include "amfd/schedule.hpp"

namespace amfd {

struct AmfdParams {
  double eta = 0.1;
  double zeta = 0.0;
  Schedule schedule;
  std::uint64_t seed = 0;
  std::size_t n_replicas = 1;
  std::size_t n_threads = 0;
  // Record the rounded energy every this many steps; 0 disables.
  std::size_t trajectory_stride = 0;
};

struct SerialMfaParams {
  Schedule schedule;
  std::uint64_t seed = 0;
  std::size_t n_replicas = 1;
  std::size_t n_threads = 0;
  std::size_t trajectory_stride = 0;
  // Anneal on normalize(model) so temperatures are scale free.
  bool normalize = true;
};

struct MfaParams {
  Schedule schedule;
  std::uint64_t seed = 0;
  // Weight of the self-consistent value in each update, in (0, 1].
  double alpha = 1.0;
  // Standard deviation of the noise added to the mean field; 0 disables it.
  double sigma = 0.0;
  std::size_t n_replicas = 1;
  std::size_t n_threads = 0;
  std::size_t trajectory_stride = 0;
  bool normalize = true;
};

// Throw std::invalid_argument on out-of-range parameters.
void validate(const AmfdParams& params);
void validate(const SerialMfaParams& params);
void validate(const MfaParams& params);

struct AmfdState {
  MfVector prev;
  MfVector curr;
};

// prev uniform in [0,1]^N, curr = prev - eta (prev - 0.5) clamped to [0, 1].
AmfdState amfd_init(std::size_t n_spin, double eta, Rng& rng);

// One descent step on a normalized model. The mean field is taken at the
// forward point curr + zeta (curr - prev); the entropy term and the boundary
// test use curr. Returns the clamped next state.
MfVector amfd_step(const QuboModel& model_norm, std::span<const double> curr,
                   std::span<const double> prev, double temperature, double eta,
                   double zeta);

// Normalizes once, then runs params.n_replicas replicas of n_step steps.
// Deterministic in (seed, n_replicas) regardless of n_threads. Throws
// std::domain_error for a degenerate (all-zero) model.
SolveResult amfd_solve(const QuboModel& model, const AmfdParams& params);

SolveResult mfa_solve(const QuboModel& model, const SerialMfaParams& params);

// x_new = (1 - alpha) x + alpha / (1 + exp((Phi + eps) / T)), Phi = h + Q x,
// eps ~ N(0, noise_std^2) per spin.
MfVector pmfa_step(const QuboModel& model, std::span<const double> x,
                   double temperature, double alpha, double noise_std, Rng& rng);

SolveResult pmfa_solve(const QuboModel& model, const MfaParams& params);

}  // namespace amfd

#endif  // AMFD_SOLVERS_HPP_
