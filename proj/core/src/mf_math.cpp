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

#include "amfd/mf_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace amfd {
namespace {

double XLogX(double v) { return v > 0.0 ? v * std::log(v) : 0.0; }

void CheckSize(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

double KlBreakdown::kl_total() const {
  if (!log_partition) {
    throw std::logic_error("KlBreakdown::kl_total: log partition not available");
  }
  return mf_entropy + *log_partition + mf_energy / temperature;
}

double mf_entropy_exact(std::span<const double> x) {
  double total = 0.0;
  for (double xi : x) total += XLogX(1.0 - xi) + XLogX(xi);
  return total;
}

double mf_entropy_taylor(std::span<const double> x) {
  const double ln_half = -std::numbers::ln2;
  double total = 0.0;
  for (double xi : x) {
    const double d = xi - 0.5;
    total += 2.0 * d * d + ln_half;
  }
  return total;
}

double mf_energy(const QuboModel& model, std::span<const double> x) {
  CheckSize(x.size(), model.n_spin(), "mf_energy");
  const auto h = model.h();
  double linear = 0.0;
  double quadratic = 0.0;
  for (std::size_t i = 0; i < model.n_spin(); ++i) {
    linear += h[i] * x[i];
    const auto cols = model.row_columns(i);
    const auto vals = model.row_values(i);
    double row = 0.0;
    for (std::size_t k = 0; k < cols.size() && cols[k] < i; ++k) {
      row += vals[k] * x[cols[k]];
    }
    quadratic += x[i] * row;
  }
  return linear + quadratic;
}

std::vector<double> kl_gradient(const QuboModel& model,
                                std::span<const double> x, double temperature) {
  CheckSize(x.size(), model.n_spin(), "kl_gradient");
  if (!(temperature > 0.0)) throw std::invalid_argument("kl_gradient: T must be positive");
  for (double xi : x) {
    if (!(xi > 0.0 && xi < 1.0)) {
      throw std::domain_error("boundary gradient undefined: x must lie in (0, 1)");
    }
  }
  std::vector<double> grad = mean_field(model, x);
  for (std::size_t i = 0; i < grad.size(); ++i) {
    grad[i] = std::log(x[i] / (1.0 - x[i])) + grad[i] / temperature;
  }
  return grad;
}

std::vector<double> scaled_kl_gradient(std::span<const double> x,
                                       std::span<const double> phi,
                                       double temperature) {
  CheckSize(phi.size(), x.size(), "scaled_kl_gradient");
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    grad[i] = temperature * (x[i] - 0.5);
    if (x[i] > 0.0 && x[i] < 1.0) grad[i] += phi[i];
  }
  return grad;
}

double logistic_of_field(double phi, double temperature) {
  if (temperature == 0.0) {
    if (phi > 0.0) return 0.0;
    if (phi < 0.0) return 1.0;
    return 0.5;
  }
  const double z = std::clamp(phi / temperature, -kLogisticExponentClamp,
                              kLogisticExponentClamp);
  return 1.0 / (1.0 + std::exp(z));
}

MfVector self_consistent_value(std::span<const double> phi, double temperature) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("self_consistent_value: T must be positive");
  }
  MfVector x(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    x[i] = logistic_of_field(phi[i], temperature);
  }
  return x;
}

KlBreakdown kl_exact_bruteforce(const QuboModel& model,
                                std::span<const double> x, double temperature) {
  const std::size_t n = model.n_spin();
  if (n > kMaxBruteForceSpins) {
    throw std::invalid_argument("kl_exact_bruteforce: n_spin " + std::to_string(n) +
                                " exceeds enumeration limit " +
                                std::to_string(kMaxBruteForceSpins));
  }
  CheckSize(x.size(), n, "kl_exact_bruteforce");
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("kl_exact_bruteforce: T must be positive");
  }
  for (double xi : x) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
      throw std::invalid_argument("kl_exact_bruteforce: x outside [0, 1]");
    }
  }

  const std::size_t n_states = std::size_t{1} << n;
  const auto h = model.h();
  std::vector<double> energies(n_states);
  std::vector<double> log_p(n_states);
  double max_neg = -std::numeric_limits<double>::infinity();
  for (std::size_t state = 0; state < n_states; ++state) {
    double e = 0.0;
    double lp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool si = (state >> i) & 1U;
      const double pi = si ? x[i] : 1.0 - x[i];
      lp += pi > 0.0 ? std::log(pi) : -std::numeric_limits<double>::infinity();
      if (!si) continue;
      e += h[i];
      for (std::size_t j = 0; j < i; ++j) {
        if ((state >> j) & 1U) e += model.q(i, j);
      }
    }
    energies[state] = e;
    log_p[state] = lp;
    max_neg = std::max(max_neg, -e / temperature);
  }

  double z_scaled = 0.0;
  for (double e : energies) z_scaled += std::exp(-e / temperature - max_neg);
  const double log_z = max_neg + std::log(z_scaled);

  double kl = 0.0;
  for (std::size_t state = 0; state < n_states; ++state) {
    if (!std::isfinite(log_p[state])) continue;
    const double p = std::exp(log_p[state]);
    kl += p * (log_p[state] + log_z + energies[state] / temperature);
  }

  KlBreakdown out;
  out.mf_entropy = mf_entropy_exact(x);
  out.log_partition = log_z;
  out.mf_energy = mf_energy(model, x);
  out.temperature = temperature;
  out.kl_enumerated = kl;

  const double closed = out.kl_total();
  const double scale = 1.0 + std::abs(log_z) + std::abs(out.mf_energy / temperature);
  if (std::abs(closed - kl) > 1e-9 * scale) {
    throw std::logic_error("kl_exact_bruteforce: closed form and enumeration disagree");
  }
  return out;
}

}  // namespace amfd
