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

#include "amfd/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace amfd {

Schedule linear_schedule(double t_init, double t_fin, std::size_t n_step) {
  if (n_step == 0) throw std::invalid_argument("schedule: n_step must be at least 1");
  if (!(t_init >= 0.0) || !(t_fin >= 0.0) || !std::isfinite(t_init) ||
      !std::isfinite(t_fin)) {
    throw std::invalid_argument("schedule: temperatures must be finite and nonnegative");
  }
  return Schedule{t_init, t_fin, n_step};
}

double temperature(const Schedule& schedule, std::size_t t) {
  if (t < 1 || t > schedule.n_step) {
    throw std::out_of_range("schedule: step " + std::to_string(t) +
                            " outside [1, " + std::to_string(schedule.n_step) + "]");
  }
  if (schedule.n_step == 1) return schedule.t_init;
  if (t == schedule.n_step) return schedule.t_fin;
  const double slope = (schedule.t_init - schedule.t_fin) /
                       static_cast<double>(schedule.n_step - 1);
  return schedule.t_init - slope * static_cast<double>(t - 1);
}

std::size_t preset_steps(StepPreset preset, std::size_t n_spin) {
  switch (preset) {
    case StepPreset::kShort:
      return n_spin;
    case StepPreset::kMedium:
      return 10 * n_spin;
    case StepPreset::kLong:
      return 100 * n_spin;
  }
  return n_spin;
}

std::optional<StepPreset> parse_step_preset(std::string_view name) {
  if (name == "short") return StepPreset::kShort;
  if (name == "medium") return StepPreset::kMedium;
  if (name == "long") return StepPreset::kLong;
  return std::nullopt;
}

std::string_view step_preset_name(StepPreset preset) {
  switch (preset) {
    case StepPreset::kShort:
      return "short";
    case StepPreset::kMedium:
      return "medium";
    case StepPreset::kLong:
      return "long";
  }
  return "short";
}

}  // namespace amfd
