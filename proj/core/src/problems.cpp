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

#include "amfd/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace amfd {
namespace {

void CheckDim(std::span<const std::uint8_t> s, std::size_t n) { check_spins(s, n); }

void CheckEncoding(const Encoding& enc, ProblemKind kind, std::size_t n_spin) {
  if (enc.kind != kind || enc.n_spin() != n_spin) {
    throw std::invalid_argument("decode: encoding does not match the spin vector");
  }
}

// Adds w * (1 - sum_{v in group} s_v)^2 over one one-hot group.
void AddOneHot(QuboBuilder& b, std::span<const std::size_t> group, double w) {
  for (std::size_t a = 0; a < group.size(); ++a) {
    b.AddLinear(group[a], -w);
    for (std::size_t c = a + 1; c < group.size(); ++c) {
      b.AddQuadratic(group[a], group[c], 2.0 * w);
    }
  }
  b.AddConstant(w);
}

// Reads an n x n one-hot grid. Returns the column of each row (-1 unless
// exactly one is set) and counts rows and columns that are not one-hot.
std::vector<int> ReadPermutation(std::span<const std::uint8_t> s, const Encoding& enc,
                                 std::size_t* violations) {
  std::vector<int> col_of(enc.n_row, -1);
  std::vector<std::size_t> col_count(enc.n_col, 0);
  std::size_t bad = 0;
  for (std::size_t r = 0; r < enc.n_row; ++r) {
    std::size_t count = 0;
    for (std::size_t c = 0; c < enc.n_col; ++c) {
      if (s[enc.index(r, c)]) {
        ++count;
        ++col_count[c];
        col_of[r] = static_cast<int>(c);
      }
    }
    if (count != 1) {
      ++bad;
      col_of[r] = -1;
    }
  }
  for (std::size_t c = 0; c < enc.n_col; ++c) bad += col_count[c] != 1;
  *violations = bad;
  return col_of;
}

}  // namespace

std::string_view problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMcp:
      return "mcp";
    case ProblemKind::kMisp:
      return "misp";
    case ProblemKind::kTsp:
      return "tsp";
    case ProblemKind::kQap:
      return "qap";
    case ProblemKind::kGcp:
      return "gcp";
  }
  return "mcp";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view name) {
  for (ProblemKind k : {ProblemKind::kMcp, ProblemKind::kMisp, ProblemKind::kTsp,
                        ProblemKind::kQap, ProblemKind::kGcp}) {
    if (problem_name(k) == name) return k;
  }
  return std::nullopt;
}

std::size_t Encoding::index(std::size_t row, std::size_t col) const {
  if (row >= n_row || col >= n_col) throw std::out_of_range("encoding: index out of range");
  return row * n_col + col;
}

std::size_t Encoding::flag_index(std::size_t k) const {
  if (k >= n_flag) throw std::out_of_range("encoding: flag out of range");
  return n_row * n_col + k;
}

Encoding::Slot Encoding::locate(std::size_t spin) const {
  if (spin >= n_spin()) throw std::out_of_range("encoding: spin out of range");
  const std::size_t grid = n_row * n_col;
  if (spin >= grid) return Slot{true, spin - grid, 0};
  return Slot{false, spin / n_col, spin % n_col};
}

// H = sum over edges of E (2 s_i s_j - s_i - s_j), i.e. minus the cut weight.
BuiltProblem build_mcp(const WeightedGraph& g) {
  QuboBuilder b(g.n_vertex());
  for (const Edge& e : g.edges()) {
    b.AddQuadratic(e.u, e.v, 2.0 * e.weight);
    b.AddLinear(e.u, -e.weight);
    b.AddLinear(e.v, -e.weight);
  }
  return {b.Build(), Encoding{ProblemKind::kMcp, g.n_vertex(), 1, 0}};
}

DecodedSolution decode_mcp(const WeightedGraph& g, std::span<const std::uint8_t> s) {
  CheckDim(s, g.n_vertex());
  double cut = 0.0;
  for (const Edge& e : g.edges()) {
    if (s[e.u] != s[e.v]) cut += e.weight;
  }
  DecodedSolution out;
  out.kind = ProblemKind::kMcp;
  out.objective = 0.0 - cut;  // no -0 for an empty cut
  out.feasible = true;
  out.witness.assign(s.begin(), s.end());
  return out;
}

BuiltProblem build_misp(const WeightedGraph& g, double penalty) {
  if (!(penalty > 0.0)) throw std::invalid_argument("misp: penalty must be positive");
  QuboBuilder b(g.n_vertex());
  for (std::size_t i = 0; i < g.n_vertex(); ++i) b.AddLinear(i, -1.0);
  for (const Edge& e : g.edges()) b.AddQuadratic(e.u, e.v, penalty);
  return {b.Build(), Encoding{ProblemKind::kMisp, g.n_vertex(), 1, 0}};
}

DecodedSolution decode_misp(const WeightedGraph& g, std::span<const std::uint8_t> s) {
  CheckDim(s, g.n_vertex());
  DecodedSolution out;
  out.kind = ProblemKind::kMisp;
  std::size_t size = 0;
  for (std::uint8_t v : s) size += v;
  for (const Edge& e : g.edges()) out.violations += s[e.u] && s[e.v];
  out.objective = 0.0 - static_cast<double>(size);
  out.feasible = out.violations == 0;
  out.witness.assign(s.begin(), s.end());
  return out;
}

double tsp_penalty(const TspInstance& inst) {
  const std::size_t n = inst.n_city();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row += inst.d(i, j);
    }
    best = std::max(best, row / static_cast<double>(n - 1));
  }
  return best;
}

BuiltProblem build_tsp(const TspInstance& inst) {
  const std::size_t n = inst.n_city();
  const std::size_t m = n - 1;  // free cities and tour positions
  const std::size_t depot = n - 1;
  const Encoding enc{ProblemKind::kTsp, m, m, 0};
  QuboBuilder b(enc.n_spin());

  for (std::size_t k = 0; k + 1 < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && inst.d(i, j) != 0.0) {
          b.AddQuadratic(enc.index(i, k), enc.index(j, k + 1), inst.d(i, j));
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    b.AddLinear(enc.index(i, 0), inst.d(depot, i));
    b.AddLinear(enc.index(i, m - 1), inst.d(i, depot));
  }

  const double penalty = tsp_penalty(inst);
  std::vector<std::size_t> group(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) group[i] = enc.index(i, k);
    AddOneHot(b, group, penalty);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) group[k] = enc.index(i, k);
    AddOneHot(b, group, penalty);
  }
  return {b.Build(), enc};
}

double tour_length(const TspInstance& inst, std::span<const int> tour) {
  const std::size_t n = inst.n_city();
  if (tour.size() != n) throw std::invalid_argument("tour: wrong length");
  std::vector<bool> seen(n, false);
  for (int c : tour) {
    if (c < 0 || static_cast<std::size_t>(c) >= n || seen[c]) {
      throw std::invalid_argument("tour: not a permutation");
    }
    seen[c] = true;
  }
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) total += inst.d(tour[k], tour[(k + 1) % n]);
  return total;
}

DecodedSolution decode_tsp(const TspInstance& inst, std::span<const std::uint8_t> s,
                           const Encoding& enc) {
  CheckEncoding(enc, ProblemKind::kTsp, s.size());
  if (enc.n_row + 1 != inst.n_city() || enc.n_col != enc.n_row) {
    throw std::invalid_argument("decode_tsp: encoding does not match the instance");
  }
  DecodedSolution out;
  out.kind = ProblemKind::kTsp;
  const std::vector<int> position = ReadPermutation(s, enc, &out.violations);
  out.feasible = out.violations == 0;
  const std::size_t n = inst.n_city();
  out.witness.assign(n, -1);
  out.witness[0] = static_cast<int>(n - 1);
  for (std::size_t city = 0; city < position.size(); ++city) {
    if (position[city] >= 0) out.witness[position[city] + 1] = static_cast<int>(city);
  }
  if (out.feasible) out.objective = tour_length(inst, out.witness);
  return out;
}

double qap_penalty(const QapInstance& inst) {
  const std::size_t n = inst.n();
  std::vector<double> flow_out(n, 0.0), dist_out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      flow_out[i] += inst.f(i, k);
      dist_out[i] += inst.d(i, k);
    }
  }
  double best = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      best = std::max(best, flow_out[i] * dist_out[j] / static_cast<double>(n - 1));
    }
  }
  return best;
}

// sum_{i,j,k,l} f(i,k) d(j,l) s_ij s_kl: each unordered pair of distinct
// variables collects both orderings; s_ij * s_ij folds into h.
BuiltProblem build_qap(const QapInstance& inst) {
  const std::size_t n = inst.n();
  const Encoding enc{ProblemKind::kQap, n, n, 0};
  QuboBuilder b(enc.n_spin());
  for (std::size_t a = 0; a < enc.n_spin(); ++a) {
    const std::size_t i = a / n, j = a % n;
    const double self = inst.f(i, i) * inst.d(j, j);
    if (self != 0.0) b.AddLinear(a, self);
    for (std::size_t c = a + 1; c < enc.n_spin(); ++c) {
      const std::size_t k = c / n, l = c % n;
      const double w = inst.f(i, k) * inst.d(j, l) + inst.f(k, i) * inst.d(l, j);
      if (w != 0.0) b.AddQuadratic(a, c, w);
    }
  }
  const double penalty = qap_penalty(inst);
  if (!(penalty > 0.0)) throw std::invalid_argument("qap: degenerate instance, zero penalty");
  std::vector<std::size_t> group(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) group[j] = enc.index(i, j);
    AddOneHot(b, group, penalty);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) group[i] = enc.index(i, j);
    AddOneHot(b, group, penalty);
  }
  return {b.Build(), enc};
}

double assignment_cost(const QapInstance& inst, std::span<const int> location) {
  const std::size_t n = inst.n();
  if (location.size() != n) throw std::invalid_argument("assignment: wrong length");
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) total += inst.f(i, k) * inst.d(location[i], location[k]);
  }
  return total;
}

DecodedSolution decode_qap(const QapInstance& inst, std::span<const std::uint8_t> s,
                           const Encoding& enc) {
  CheckEncoding(enc, ProblemKind::kQap, s.size());
  if (enc.n_row != inst.n() || enc.n_col != inst.n()) {
    throw std::invalid_argument("decode_qap: encoding does not match the instance");
  }
  DecodedSolution out;
  out.kind = ProblemKind::kQap;
  out.witness = ReadPermutation(s, enc, &out.violations);
  out.feasible = out.violations == 0;
  if (out.feasible) out.objective = assignment_cost(inst, out.witness);
  return out;
}

BuiltProblem build_gcp(const WeightedGraph& g, std::optional<std::size_t> n_color) {
  const std::size_t colors = n_color.value_or(g.max_degree() + 1);
  if (colors < 1) throw std::invalid_argument("gcp: n_color must be at least 1");
  const double a = kGcpPenalty, b_pen = kGcpPenalty, c_pen = kGcpPenalty;
  const Encoding enc{ProblemKind::kGcp, g.n_vertex(), colors, colors};
  QuboBuilder b(enc.n_spin());
  for (std::size_t k = 0; k < colors; ++k) {
    const std::size_t y = enc.flag_index(k);
    b.AddLinear(y, 1.0);
    for (std::size_t i = 0; i < g.n_vertex(); ++i) {
      b.AddLinear(enc.index(i, k), a);
      b.AddQuadratic(y, enc.index(i, k), -a);
    }
  }
  std::vector<std::size_t> group(colors);
  for (std::size_t i = 0; i < g.n_vertex(); ++i) {
    for (std::size_t k = 0; k < colors; ++k) group[k] = enc.index(i, k);
    AddOneHot(b, group, b_pen);
  }
  for (const Edge& e : g.edges()) {
    for (std::size_t k = 0; k < colors; ++k) {
      b.AddQuadratic(enc.index(e.u, k), enc.index(e.v, k), c_pen);
    }
  }
  return {b.Build(), enc};
}

DecodedSolution decode_gcp(const WeightedGraph& g, std::span<const std::uint8_t> s,
                           const Encoding& enc) {
  CheckEncoding(enc, ProblemKind::kGcp, s.size());
  if (enc.n_row != g.n_vertex() || enc.n_flag != enc.n_col) {
    throw std::invalid_argument("decode_gcp: encoding does not match the instance");
  }
  DecodedSolution out;
  out.kind = ProblemKind::kGcp;
  out.witness.assign(g.n_vertex(), -1);
  std::vector<bool> used(enc.n_col, false);
  for (std::size_t i = 0; i < enc.n_row; ++i) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < enc.n_col; ++k) {
      if (s[enc.index(i, k)]) {
        ++count;
        used[k] = true;
        out.witness[i] = static_cast<int>(k);
      }
    }
    if (count != 1) {
      ++out.violations;
      out.witness[i] = -1;
    }
  }
  for (const Edge& e : g.edges()) {
    for (std::size_t k = 0; k < enc.n_col; ++k) {
      out.violations += s[enc.index(e.u, k)] && s[enc.index(e.v, k)];
    }
  }
  std::size_t n_used = 0;
  for (std::size_t k = 0; k < enc.n_col; ++k) {
    n_used += used[k];
    out.flag_mismatches += static_cast<bool>(s[enc.flag_index(k)]) != used[k];
  }
  out.objective = static_cast<double>(n_used);
  out.feasible = out.violations == 0;
  return out;
}

double accuracy(double bks, double sol) {
  if (bks == 0.0) throw std::domain_error("accuracy undefined for a zero best-known value");
  return std::max(0.0, 1.0 - std::fabs((bks - sol) / bks));
}

}  // namespace amfd
