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

// Best-known values and published parameter rows for the standard
// benchmark instances.

#include <array>
#include <cctype>
#include <cstdio>

#include "amfd/bench.hpp"

namespace amfd {
namespace {

struct KnownInstance {
  const char* name;
  const char* problem;
  double bks;
};

// Table sign convention: max-cut and independent set are negated.
constexpr std::array<KnownInstance, 30> kKnown = {{
    {"G1", "mcp", -11624},        {"G35", "mcp", -7687},        {"G48", "mcp", -6000},
    {"G56", "mcp", -4017},        {"G63", "mcp", -27045},       {"G72", "mcp", -7008},
    {"DSJC1000_5", "misp", -15},  {"p_hat1500-1", "misp", -12}, {"C2000.9", "misp", -80},
    {"MANN_a81", "misp", -1100},  {"keller6", "misp", -59},     {"C4000.5", "misp", -18},
    {"bays29", "tsp", 2020},      {"dantzig42", "tsp", 699},    {"eil51", "tsp", 426},
    {"st70", "tsp", 675},         {"pr76", "tsp", 108159},      {"rd100", "tsp", 7910},
    {"esc32a", "qap", 130},       {"ste36a", "qap", 9526},      {"tai50a", "qap", 4938796},
    {"lipa70a", "qap", 169755},   {"sko81", "qap", 90998},      {"wil100", "qap", 273038},
    {"myciel5", "gcp", 6},        {"queen8_8", "gcp", 9},       {"jean", "gcp", 10},
    {"huck", "gcp", 11},          {"david", "gcp", 11},         {"miles1000", "gcp", 42},
}};

struct AmfdRow {
  const char* name;
  double eta, zeta, t_init, t_fin;
};

constexpr std::array<AmfdRow, 30> kShortRows = {{
    {"G1", 0.1, 5, 0.3, 0},         {"G35", 0.2, 5, 0.3, 0},
    {"G48", 0.2, 5, 0.3, 0},        {"G56", 0.1, 5, 0.5, 0},
    {"G63", 0.2, 5, 0.3, 0},        {"G72", 0.1, 5, 0.5, 0},
    {"DSJC1000_5", 0.02, 5, 0.5, 0}, {"C2000.9", 0.05, 2, 0.5, 0},
    {"p_hat1500-1", 0.1, 0, 0.3, 0}, {"MANN_a81", 0.05, 5, 0.3, 0},
    {"keller6", 0.01, 10, 0.3, 0},  {"C4000.5", 0.005, 5, 0.3, 0},
    {"bays29", 0.02, 0, 0.3, 0},    {"dantzig42", 0.05, 0, 0.3, 0},
    {"eil51", 0.05, 0, 0.3, 0},     {"st70", 0.02, 0, 0.3, 0},
    {"pr76", 0.02, 0, 0.3, 0},      {"rd100", 0.01, 1, 0.3, 0},
    {"esc32a", 0.05, 1, 0.5, 0},    {"ste36a", 0.005, 0, 0.3, 0},
    {"tai50a", 0.005, 0, 0.3, 0},   {"lipa70a", 0.002, 2, 0.3, 0},
    {"sko81", 0.002, 0, 0.5, 0},    {"wil100", 0.002, 2, 0.5, 0},
    {"david", 0.005, 50, 0.3, 0},   {"queen8_8", 0.2, 0, 0.5, 0},
    {"myciel5", 0.2, 0, 0.3, 0},    {"jean", 0.005, 50, 0.3, 0},
    {"huck", 0.005, 50, 0.3, 0},    {"miles1000", 0.02, 5, 0.3, 0},
}};

constexpr std::array<AmfdRow, 5> kSweepRows = {{
    {"G35", 0.2, 5, 0.3, 0.1},
    {"C2000.9", 0.05, 2, 0.5, 0},
    {"eil51", 0.05, 0, 0.3, 0.1},
    {"tai50a", 0.005, 0, 0.3, 0.1},
    {"jean", 0.005, 50, 0.3, 0},
}};

struct NmfaRow {
  const char* name;
  double alpha, sigma, t_init, t_fin;
};

constexpr std::array<NmfaRow, 5> kNmfaRows = {{
    {"G35", 0.2, 0.1, 1, 0.001},
    {"C2000.9", 0.2, 0.001, 0.01, 0.001},
    {"eil51", 0.3, 0.0001, 0.005, 0},
    {"tai50a", 0.2, 0.0001, 0.005, 0.001},
    {"jean", 0.1, 0.0001, 0.005, 0.0001},
}};

std::string Canonical(std::string_view name) {
  std::string out;
  for (char c : name) {
    out.push_back(c == '.' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

const KnownInstance* FindKnown(std::string_view name) {
  const std::string key = Canonical(name);
  for (const auto& k : kKnown) {
    if (Canonical(k.name) == key) return &k;
  }
  return nullptr;
}

std::string Number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename Rows>
const typename Rows::value_type* FindRow(const Rows& rows, std::string_view name) {
  const std::string key = Canonical(name);
  for (const auto& r : rows) {
    if (Canonical(r.name) == key) return &r;
  }
  return nullptr;
}

Settings AmfdSettings(const AmfdRow& row) {
  return Settings{{"problem", FindKnown(row.name)->problem},
                  {"solver", "amfd"},
                  {"eta", Number(row.eta)},
                  {"zeta", Number(row.zeta)},
                  {"t-init", Number(row.t_init)},
                  {"t-fin", Number(row.t_fin)}};
}

}  // namespace

std::optional<double> lookup_bks(std::string_view instance_name) {
  const KnownInstance* k = FindKnown(instance_name);
  if (!k) return std::nullopt;
  return k->bks;
}

std::optional<Settings> lookup_preset(std::string_view name) {
  const std::size_t colon = name.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view family = name.substr(0, colon);
  const std::string_view instance = name.substr(colon + 1);
  if (family == "paper") {
    if (const AmfdRow* r = FindRow(kShortRows, instance)) return AmfdSettings(*r);
  } else if (family == "paper-sweep") {
    if (const AmfdRow* r = FindRow(kSweepRows, instance)) return AmfdSettings(*r);
  } else if (family == "paper-nmfa") {
    if (const NmfaRow* r = FindRow(kNmfaRows, instance)) {
      return Settings{{"problem", FindKnown(r->name)->problem},
                      {"solver", "nmfa"},
                      {"alpha", Number(r->alpha)},
                      {"sigma", Number(r->sigma)},
                      {"t-init", Number(r->t_init)},
                      {"t-fin", Number(r->t_fin)}};
    }
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& r : kShortRows) out.push_back(std::string("paper:") + r.name);
  for (const auto& r : kSweepRows) out.push_back(std::string("paper-sweep:") + r.name);
  for (const auto& r : kNmfaRows) out.push_back(std::string("paper-nmfa:") + r.name);
  return out;
}

}  // namespace amfd
