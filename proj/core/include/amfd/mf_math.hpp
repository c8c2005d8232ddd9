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

// KL divergence between the mean-field product distribution and the canonical
// distribution exp(-H/T)/Z, its pieces and gradients.
//
// For the product distribution with P(s_i = 1) = x_i,
//
//   KL(x) = S(x) + ln Z + E(x) / T
//
// where S is the mf-entropy sum_i [(1-x_i) ln(1-x_i) + x_i ln x_i] and E is the
// mf-energy sum_i h_i x_i + sum_i sum_{j<i} Q_ij x_i x_j. ln Z does not depend
// on x and is only computed by enumeration for small models.

#ifndef AMFD_MF_MATH_HPP_
#define AMFD_MF_MATH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "amfd/qubo.hpp"

namespace amfd {

// Largest |Phi/T| fed to exp(); beyond it the logistic is saturated.
inline constexpr double kLogisticExponentClamp = 500.0;

// Largest model kl_exact_bruteforce will enumerate.
inline constexpr std::size_t kMaxBruteForceSpins = 20;

struct KlBreakdown {
  double mf_entropy = 0.0;
  // ln Z of the canonical distribution of H - C (C cancels in the KL).
  std::optional<double> log_partition;
  // Excludes C.
  double mf_energy = 0.0;
  double temperature = 1.0;
  // sum_s P_MF(s) ln(P_MF(s) / P_C(s)) by enumeration, when computed.
  std::optional<double> kl_enumerated;

  // mf_entropy + log_partition + mf_energy / temperature. Requires
  // log_partition.
  double kl_total() const;
};

// sum_i [(1-x_i) ln(1-x_i) + x_i ln x_i] with 0 ln 0 = 0.
double mf_entropy_exact(std::span<const double> x);

// Second-order expansion at 0.5: sum_i [2 (x_i - 0.5)^2 + ln 0.5].
double mf_entropy_taylor(std::span<const double> x);

// sum_i h_i x_i + sum_i sum_{j<i} Q_ij x_i x_j.
double mf_energy(const QuboModel& model, std::span<const double> x);

// Exact gradient of the KL divergence in x: ln(x_i/(1-x_i)) + Phi_i/T. Needs
// every x_i strictly inside (0, 1); throws std::domain_error
// ("boundary gradient undefined") otherwise.
std::vector<double> kl_gradient(const QuboModel& model,
                                std::span<const double> x, double temperature);

// Temperature-scaled gradient with the entropy replaced by its quadratic
// expansion (constant factor dropped): T (x_i - 0.5) + phi_i inside the box,
// T (x_i - 0.5) when x_i is 0 or 1. `phi` may be evaluated at another point.
std::vector<double> scaled_kl_gradient(std::span<const double> x,
                                       std::span<const double> phi,
                                       double temperature);

// 1 / (1 + exp(phi / T)) with the exponent clamped to
// +-kLogisticExponentClamp. At T == 0 returns the limit (0, 1, or 0.5 when
// phi == 0).
double logistic_of_field(double phi, double temperature);

// x_i = 1 / (1 + exp(Phi_i / T)). Requires T > 0.
MfVector self_consistent_value(std::span<const double> phi, double temperature);

// ln Z by enumeration, the enumerated KL and the closed-form pieces. Throws
// std::invalid_argument when n_spin > kMaxBruteForceSpins and
// std::logic_error if the two KL routes disagree by more than 1e-9.
KlBreakdown kl_exact_bruteforce(const QuboModel& model,
                                std::span<const double> x, double temperature);

}  // namespace amfd

#endif  // AMFD_MF_MATH_HPP_
