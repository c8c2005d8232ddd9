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

// Benchmark pipeline: parse -> build -> solve -> decode -> score, plus result
// emission and the flat key=value configuration used by amfd-bench.

#ifndef AMFD_BENCH_HPP_
#define AMFD_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amfd/ingest.hpp"
#include "amfd/problems.hpp"
#include "amfd/schedule.hpp"

namespace amfd {

enum class SolverKind { kAmfd, kMfa, kPmfa, kNmfa };

std::string_view solver_name(SolverKind kind);
std::optional<SolverKind> parse_solver_kind(std::string_view name);

// Unset optionals take the solver defaults: eta 0.1, zeta 0, alpha 1 for
// pmfa and 0.2 for nmfa, sigma 0.01 for nmfa.
struct RunConfig {
  ProblemKind problem = ProblemKind::kMcp;
  std::string instance_path;
  SolverKind solver = SolverKind::kAmfd;
  std::optional<double> eta;
  std::optional<double> zeta;
  std::optional<double> alpha;
  std::optional<double> sigma;
  double t_init = 0.3;
  double t_fin = 0.0;
  // At most one of the two; neither means the short preset.
  std::optional<std::size_t> n_step;
  std::optional<StepPreset> preset;
  std::size_t n_replicas = 128;
  std::uint64_t seed = 0;
  std::optional<double> bks;
  std::size_t n_threads = 0;
  std::optional<std::size_t> n_color;
};

// Throws std::invalid_argument for conflicting or solver-irrelevant fields.
void validate(const RunConfig& config);

struct ReplicaSummary {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double energy = 0.0;
  bool feasible = false;
  std::optional<double> objective;

  friend bool operator==(const ReplicaSummary&, const ReplicaSummary&) = default;
};

struct RunRecord {
  std::string instance;
  std::string problem;
  std::string solver;
  std::size_t n_spin = 0;
  std::size_t n_step = 0;
  std::size_t n_replicas = 0;
  std::uint64_t seed = 0;
  std::optional<double> eta;
  std::optional<double> zeta;
  std::optional<double> alpha;
  std::optional<double> sigma;
  double t_init = 0.0;
  double t_fin = 0.0;
  // Best reported objective over feasible replicas; empty when none is
  // feasible.
  std::optional<double> best_objective;
  double best_energy = 0.0;
  double mean_energy = 0.0;
  std::size_t feasible_count = 0;
  std::optional<double> bks;
  std::optional<double> accuracy;
  double wall_ms = 0.0;
  std::vector<ReplicaSummary> replicas;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// Loads config.instance_path and runs it.
RunRecord run_benchmark(const RunConfig& config);
// Runs an already parsed instance; config.instance_path is ignored.
RunRecord run_benchmark(const RunConfig& config, const ParsedInstance& instance);

// One record per entry of `steps`, which must be nonempty, strictly
// increasing and free of zeros. config.n_step and config.preset are
// overridden.
std::vector<RunRecord> sweep_nstep(const RunConfig& config, const ParsedInstance& instance,
                                   const std::vector<std::size_t>& steps);
std::vector<RunRecord> sweep_nstep(const RunConfig& config,
                                   const std::vector<std::size_t>& steps);

enum class ResultFormat { kCsv, kJson };
std::optional<ResultFormat> parse_result_format(std::string_view name);

// Byte-stable: fixed field order, doubles printed with 17 significant
// digits, absent values as empty CSV cells or JSON null.
std::string format_results(const std::vector<RunRecord>& records, ResultFormat format);
// Writes format_results to `path`; throws std::runtime_error on I/O failure.
void emit_results(const std::vector<RunRecord>& records, ResultFormat format,
                  const std::filesystem::path& path);
// Inverse of the JSON form. Throws std::runtime_error on malformed input.
std::vector<RunRecord> parse_results_json(std::string_view text);

// Flat settings keyed by long flag name without dashes ("t-init", "steps").
using Settings = std::map<std::string, std::string>;

// "key = value" per line; '#' starts a comment. Unknown keys are rejected.
Settings parse_settings(std::string_view text);
// Later entries win.
Settings merge_settings(const Settings& base, const Settings& overrides);
RunConfig config_from_settings(const Settings& settings);

// Bundled best-known values keyed by instance name, matched ignoring case
// with '.' and '_' treated alike.
std::optional<double> lookup_bks(std::string_view instance_name);

// Named parameter sets: "paper:NAME" (short-budget AMFD rows),
// "paper-sweep:NAME" (AMFD rows of the step sweep) and "paper-nmfa:NAME".
// Each yields problem, solver and schedule settings.
std::optional<Settings> lookup_preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace amfd

#endif  // AMFD_BENCH_HPP_
