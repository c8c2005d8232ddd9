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

#include "amfd/bench.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

#include "amfd/solvers.hpp"

namespace amfd {
namespace {

constexpr double kDefaultEta = 0.1;
constexpr double kDefaultZeta = 0.0;
constexpr double kDefaultPmfaAlpha = 1.0;
constexpr double kDefaultNmfaAlpha = 0.2;
constexpr double kDefaultNmfaSigma = 0.01;

const std::set<std::string, std::less<>> kSettingKeys = {
    "problem", "instance", "solver", "eta",   "zeta",    "alpha",  "sigma",
    "t-init",  "t-fin",    "steps",  "preset", "replicas", "seed", "bks",
    "threads", "n-color",  "out",    "format", "sweep"};

struct Effective {
  std::optional<double> eta, zeta, alpha, sigma;
};

Effective EffectiveParams(const RunConfig& c) {
  Effective e;
  switch (c.solver) {
    case SolverKind::kAmfd:
      e.eta = c.eta.value_or(kDefaultEta);
      e.zeta = c.zeta.value_or(kDefaultZeta);
      break;
    case SolverKind::kMfa:
      break;
    case SolverKind::kPmfa:
      e.alpha = c.alpha.value_or(kDefaultPmfaAlpha);
      break;
    case SolverKind::kNmfa:
      e.alpha = c.alpha.value_or(kDefaultNmfaAlpha);
      e.sigma = c.sigma.value_or(kDefaultNmfaSigma);
      break;
  }
  return e;
}

void Reject(bool present, std::string_view param, SolverKind solver) {
  if (present) {
    throw std::invalid_argument(std::string(param) + " does not apply to solver " +
                                std::string(solver_name(solver)));
  }
}

SolveResult Solve(const RunConfig& c, const QuboModel& model, const Schedule& schedule) {
  const Effective e = EffectiveParams(c);
  switch (c.solver) {
    case SolverKind::kAmfd: {
      AmfdParams p;
      p.eta = *e.eta;
      p.zeta = *e.zeta;
      p.schedule = schedule;
      p.seed = c.seed;
      p.n_replicas = c.n_replicas;
      p.n_threads = c.n_threads;
      return amfd_solve(model, p);
    }
    case SolverKind::kMfa: {
      SerialMfaParams p;
      p.schedule = schedule;
      p.seed = c.seed;
      p.n_replicas = c.n_replicas;
      p.n_threads = c.n_threads;
      return mfa_solve(model, p);
    }
    case SolverKind::kPmfa:
    case SolverKind::kNmfa: {
      MfaParams p;
      p.schedule = schedule;
      p.seed = c.seed;
      p.alpha = *e.alpha;
      p.sigma = e.sigma.value_or(0.0);
      p.n_replicas = c.n_replicas;
      p.n_threads = c.n_threads;
      return pmfa_solve(model, p);
    }
  }
  throw std::logic_error("unknown solver");
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double SettingDouble(const std::string& key, const std::string& value) {
  double v = 0.0;
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw std::invalid_argument(key + ": expected a number, got '" + value + "'");
  }
  return v;
}

std::uint64_t SettingUnsigned(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(key + ": expected a nonnegative integer, got '" + value + "'");
  }
  return v;
}

}  // namespace

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::kAmfd:
      return "amfd";
    case SolverKind::kMfa:
      return "mfa";
    case SolverKind::kPmfa:
      return "pmfa";
    case SolverKind::kNmfa:
      return "nmfa";
  }
  return "amfd";
}

std::optional<SolverKind> parse_solver_kind(std::string_view name) {
  for (SolverKind k : {SolverKind::kAmfd, SolverKind::kMfa, SolverKind::kPmfa, SolverKind::kNmfa}) {
    if (solver_name(k) == name) return k;
  }
  return std::nullopt;
}

void validate(const RunConfig& c) {
  if (c.n_step && c.preset) {
    throw std::invalid_argument("steps and preset are mutually exclusive");
  }
  if (c.n_step && *c.n_step == 0) throw std::invalid_argument("steps must be at least 1");
  if (c.n_replicas == 0) throw std::invalid_argument("replicas must be at least 1");
  if (!(c.t_init >= 0.0) || !(c.t_fin >= 0.0)) {
    throw std::invalid_argument("temperatures must be nonnegative");
  }
  if (c.n_color && c.problem != ProblemKind::kGcp) {
    throw std::invalid_argument("n-color applies only to gcp");
  }
  const bool amfd = c.solver == SolverKind::kAmfd;
  Reject(!amfd && c.eta.has_value(), "eta", c.solver);
  Reject(!amfd && c.zeta.has_value(), "zeta", c.solver);
  Reject((amfd || c.solver == SolverKind::kMfa) && c.alpha.has_value(), "alpha", c.solver);
  Reject(c.solver != SolverKind::kNmfa && c.sigma.has_value(), "sigma", c.solver);
  if (c.bks && *c.bks == 0.0) throw std::invalid_argument("bks must be nonzero");
}

RunRecord run_benchmark(const RunConfig& config) {
  validate(config);
  if (config.instance_path.empty()) throw std::invalid_argument("no instance path given");
  return run_benchmark(config, load_instance(config.instance_path, config.problem));
}

RunRecord run_benchmark(const RunConfig& config, const ParsedInstance& instance) {
  validate(config);
  if (instance.kind != config.problem) {
    throw std::invalid_argument("instance was parsed as " +
                                std::string(problem_name(instance.kind)) + ", config asks for " +
                                std::string(problem_name(config.problem)));
  }
  const BuiltProblem built = build_problem(instance, config.n_color);
  const std::size_t n_spin = built.model.n_spin();
  const std::size_t n_step =
      config.n_step ? *config.n_step
                    : preset_steps(config.preset.value_or(StepPreset::kShort), n_spin);
  const Schedule schedule = linear_schedule(config.t_init, config.t_fin, n_step);

  const auto start = std::chrono::steady_clock::now();
  const SolveResult solved = Solve(config, built.model, schedule);
  const auto stop = std::chrono::steady_clock::now();

  RunRecord r;
  r.instance = instance.name;
  r.problem = std::string(problem_name(config.problem));
  r.solver = std::string(solver_name(config.solver));
  r.n_spin = n_spin;
  r.n_step = n_step;
  r.n_replicas = config.n_replicas;
  r.seed = config.seed;
  const Effective e = EffectiveParams(config);
  r.eta = e.eta;
  r.zeta = e.zeta;
  r.alpha = e.alpha;
  r.sigma = e.sigma;
  r.t_init = config.t_init;
  r.t_fin = config.t_fin;
  r.best_energy = solved.best_energy;
  r.mean_energy = solved.mean_energy;
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  for (const ReplicaResult& rep : solved.per_replica) {
    const DecodedSolution d = decode_problem(instance, rep.spins, built.encoding);
    ReplicaSummary s{rep.index, rep.seed, rep.energy, d.feasible, d.objective};
    if (d.feasible && d.objective) {
      ++r.feasible_count;
      if (!r.best_objective || *d.objective < *r.best_objective) r.best_objective = d.objective;
    }
    r.replicas.push_back(s);
  }

  r.bks = config.bks ? config.bks : lookup_bks(instance.name);
  if (r.bks && r.best_objective) r.accuracy = accuracy(*r.bks, *r.best_objective);
  return r;
}

std::vector<RunRecord> sweep_nstep(const RunConfig& config, const ParsedInstance& instance,
                                   const std::vector<std::size_t>& steps) {
  if (steps.empty()) throw std::invalid_argument("sweep: empty step list");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k] == 0) throw std::invalid_argument("sweep: steps must be positive");
    if (k > 0 && steps[k] <= steps[k - 1]) {
      throw std::invalid_argument("sweep: steps must be strictly increasing");
    }
  }
  std::vector<RunRecord> out;
  RunConfig c = config;
  c.preset.reset();
  for (std::size_t n : steps) {
    c.n_step = n;
    out.push_back(run_benchmark(c, instance));
  }
  return out;
}

std::vector<RunRecord> sweep_nstep(const RunConfig& config,
                                   const std::vector<std::size_t>& steps) {
  if (config.instance_path.empty()) throw std::invalid_argument("no instance path given");
  return sweep_nstep(config, load_instance(config.instance_path, config.problem), steps);
}

std::optional<ResultFormat> parse_result_format(std::string_view name) {
  if (name == "csv") return ResultFormat::kCsv;
  if (name == "json") return ResultFormat::kJson;
  return std::nullopt;
}

Settings parse_settings(std::string_view text) {
  Settings out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = std::min(text.find('\n'), text.size());
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(std::min(nl + 1, text.size()));
    ++line_no;
    line = line.substr(0, std::min(line.find('#'), line.size()));
    line = TrimView(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    std::string key = Lower(TrimView(line.substr(0, eq)));
    std::replace(key.begin(), key.end(), '_', '-');
    if (!kSettingKeys.count(key)) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
    }
    out[key] = std::string(TrimView(line.substr(eq + 1)));
  }
  return out;
}

Settings merge_settings(const Settings& base, const Settings& overrides) {
  Settings out = base;
  for (const auto& [k, v] : overrides) out[k] = v;
  return out;
}

RunConfig config_from_settings(const Settings& s) {
  RunConfig c;
  for (const auto& [key, value] : s) {
    if (!kSettingKeys.count(key)) throw std::invalid_argument("unknown setting '" + key + "'");
  }
  auto get = [&](const char* key) -> const std::string* {
    auto it = s.find(key);
    return it == s.end() ? nullptr : &it->second;
  };
  if (const auto* v = get("problem")) {
    const auto kind = parse_problem_kind(*v);
    if (!kind) throw std::invalid_argument("unknown problem '" + *v + "'");
    c.problem = *kind;
  } else {
    throw std::invalid_argument("problem is required");
  }
  if (const auto* v = get("instance")) c.instance_path = *v;
  if (const auto* v = get("solver")) {
    const auto kind = parse_solver_kind(*v);
    if (!kind) throw std::invalid_argument("unknown solver '" + *v + "'");
    c.solver = *kind;
  }
  if (const auto* v = get("eta")) c.eta = SettingDouble("eta", *v);
  if (const auto* v = get("zeta")) c.zeta = SettingDouble("zeta", *v);
  if (const auto* v = get("alpha")) c.alpha = SettingDouble("alpha", *v);
  if (const auto* v = get("sigma")) c.sigma = SettingDouble("sigma", *v);
  if (const auto* v = get("t-init")) c.t_init = SettingDouble("t-init", *v);
  if (const auto* v = get("t-fin")) c.t_fin = SettingDouble("t-fin", *v);
  if (const auto* v = get("steps")) c.n_step = SettingUnsigned("steps", *v);
  if (const auto* v = get("preset")) {
    const auto p = parse_step_preset(*v);
    if (!p) throw std::invalid_argument("unknown preset '" + *v + "'");
    c.preset = *p;
  }
  if (const auto* v = get("replicas")) c.n_replicas = SettingUnsigned("replicas", *v);
  if (const auto* v = get("seed")) c.seed = SettingUnsigned("seed", *v);
  if (const auto* v = get("bks")) c.bks = SettingDouble("bks", *v);
  if (const auto* v = get("threads")) c.n_threads = SettingUnsigned("threads", *v);
  if (const auto* v = get("n-color")) c.n_color = SettingUnsigned("n-color", *v);
  validate(c);
  return c;
}

}  // namespace amfd
