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

#ifndef AMFD_SCHEDULE_HPP_
#define AMFD_SCHEDULE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

namespace amfd {

// Linear temperature ramp over steps 1..n_step:
//   T(t) = t_init - (t_init - t_fin) / (n_step - 1) * (t - 1).
struct Schedule {
  double t_init = 0.0;
  double t_fin = 0.0;
  std::size_t n_step = 1;
};

// Throws std::invalid_argument for n_step == 0 or negative temperatures.
Schedule linear_schedule(double t_init, double t_fin, std::size_t n_step);

// T at 1-based step t; throws std::out_of_range outside [1, n_step]. A single
// step schedule returns t_init.
double temperature(const Schedule& schedule, std::size_t t);

// Step budgets as multiples of the QUBO size.
enum class StepPreset { kShort, kMedium, kLong };

// 1x, 10x or 100x n_spin.
std::size_t preset_steps(StepPreset preset, std::size_t n_spin);

std::optional<StepPreset> parse_step_preset(std::string_view name);
std::string_view step_preset_name(StepPreset preset);

}  // namespace amfd

#endif  // AMFD_SCHEDULE_HPP_
