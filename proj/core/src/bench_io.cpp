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

// Result emission. The writers are hand-rolled so the byte layout is fixed;
// reading JSON back goes through nlohmann::json.

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "amfd/bench.hpp"

namespace amfd {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Num(std::uint64_t v) { return std::to_string(v); }

std::string JsonOpt(const std::optional<double>& v) { return v ? Num(*v) : "null"; }

std::string JsonString(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

// RFC 4180 quoting when needed.
std::string CsvCell(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string CsvOpt(const std::optional<double>& v) { return v ? Num(*v) : std::string(); }

std::string FormatCsv(const std::vector<RunRecord>& records) {
  std::string out =
      "instance,solver,n_step,n_replicas,seed,best_objective,best_energy,mean_energy,"
      "feasible_count,accuracy,wall_ms\n";
  for (const RunRecord& r : records) {
    out += CsvCell(r.instance) + ',' + CsvCell(r.solver) + ',' + Num(std::uint64_t{r.n_step}) +
           ',' + Num(std::uint64_t{r.n_replicas}) + ',' + Num(r.seed) + ',' +
           CsvOpt(r.best_objective) + ',' + Num(r.best_energy) + ',' + Num(r.mean_energy) + ',' +
           Num(std::uint64_t{r.feasible_count}) + ',' + CsvOpt(r.accuracy) + ',' +
           Num(r.wall_ms) + '\n';
  }
  return out;
}

std::string FormatJson(const std::vector<RunRecord>& records) {
  std::string out = "[";
  for (std::size_t k = 0; k < records.size(); ++k) {
    const RunRecord& r = records[k];
    out += k ? ",\n  {" : "\n  {";
    out += "\"instance\": " + JsonString(r.instance);
    out += ", \"problem\": " + JsonString(r.problem);
    out += ", \"solver\": " + JsonString(r.solver);
    out += ", \"n_spin\": " + Num(std::uint64_t{r.n_spin});
    out += ", \"n_step\": " + Num(std::uint64_t{r.n_step});
    out += ", \"n_replicas\": " + Num(std::uint64_t{r.n_replicas});
    out += ", \"seed\": " + Num(r.seed);
    out += ", \"eta\": " + JsonOpt(r.eta);
    out += ", \"zeta\": " + JsonOpt(r.zeta);
    out += ", \"alpha\": " + JsonOpt(r.alpha);
    out += ", \"sigma\": " + JsonOpt(r.sigma);
    out += ", \"t_init\": " + Num(r.t_init);
    out += ", \"t_fin\": " + Num(r.t_fin);
    out += ", \"best_objective\": " + JsonOpt(r.best_objective);
    out += ", \"best_energy\": " + Num(r.best_energy);
    out += ", \"mean_energy\": " + Num(r.mean_energy);
    out += ", \"feasible_count\": " + Num(std::uint64_t{r.feasible_count});
    out += ", \"bks\": " + JsonOpt(r.bks);
    out += ", \"accuracy\": " + JsonOpt(r.accuracy);
    out += ", \"wall_ms\": " + Num(r.wall_ms);
    out += ", \"replicas\": [";
    for (std::size_t j = 0; j < r.replicas.size(); ++j) {
      const ReplicaSummary& s = r.replicas[j];
      out += j ? ", {" : "{";
      out += "\"index\": " + Num(std::uint64_t{s.index});
      out += ", \"seed\": " + Num(s.seed);
      out += ", \"energy\": " + Num(s.energy);
      out += std::string(", \"feasible\": ") + (s.feasible ? "true" : "false");
      out += ", \"objective\": " + JsonOpt(s.objective);
      out += "}";
    }
    out += "]}";
  }
  out += records.empty() ? "]\n" : "\n]\n";
  return out;
}

std::optional<double> OptDouble(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

}  // namespace

std::string format_results(const std::vector<RunRecord>& records, ResultFormat format) {
  return format == ResultFormat::kCsv ? FormatCsv(records) : FormatJson(records);
}

void emit_results(const std::vector<RunRecord>& records, ResultFormat format,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << format_results(records, format);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<RunRecord> parse_results_json(std::string_view text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(text.begin(), text.end());
    if (!doc.is_array()) throw std::runtime_error("results JSON must be an array");
    std::vector<RunRecord> out;
    for (const auto& j : doc) {
      RunRecord r;
      r.instance = j.at("instance").get<std::string>();
      r.problem = j.at("problem").get<std::string>();
      r.solver = j.at("solver").get<std::string>();
      r.n_spin = j.at("n_spin").get<std::size_t>();
      r.n_step = j.at("n_step").get<std::size_t>();
      r.n_replicas = j.at("n_replicas").get<std::size_t>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.eta = OptDouble(j, "eta");
      r.zeta = OptDouble(j, "zeta");
      r.alpha = OptDouble(j, "alpha");
      r.sigma = OptDouble(j, "sigma");
      r.t_init = j.at("t_init").get<double>();
      r.t_fin = j.at("t_fin").get<double>();
      r.best_objective = OptDouble(j, "best_objective");
      r.best_energy = j.at("best_energy").get<double>();
      r.mean_energy = j.at("mean_energy").get<double>();
      r.feasible_count = j.at("feasible_count").get<std::size_t>();
      r.bks = OptDouble(j, "bks");
      r.accuracy = OptDouble(j, "accuracy");
      r.wall_ms = j.at("wall_ms").get<double>();
      for (const auto& s : j.at("replicas")) {
        ReplicaSummary rs;
        rs.index = s.at("index").get<std::size_t>();
        rs.seed = s.at("seed").get<std::uint64_t>();
        rs.energy = s.at("energy").get<double>();
        rs.feasible = s.at("feasible").get<bool>();
        rs.objective = OptDouble(s, "objective");
        r.replicas.push_back(rs);
      }
      out.push_back(std::move(r));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed results JSON: ") + e.what());
  }
}

}  // namespace amfd
