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

// QUBO builders and decoders for max-cut, maximum independent set, TSP,
// QAP and graph coloring.
//
// Sign convention of reported objectives: max-cut and independent set report
// the negated cut / set size (the QUBO energy of a feasible state), the other
// three report their positive native cost. Smaller is better for all five.

#ifndef AMFD_PROBLEMS_HPP_
#define AMFD_PROBLEMS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "amfd/graph.hpp"
#include "amfd/qubo.hpp"

namespace amfd {

enum class ProblemKind { kMcp, kMisp, kTsp, kQap, kGcp };

std::string_view problem_name(ProblemKind kind);
// Accepts "mcp", "misp", "tsp", "qap", "gcp".
std::optional<ProblemKind> parse_problem_kind(std::string_view name);

// Spin layout. Grid problems use a row-major n_row x n_col block of
// one-hot variables followed by n_flag extra flags:
//   mcp, misp : row = vertex, n_col = 1
//   tsp       : row = city (the last city is fixed and has no row),
//               col = tour position
//   qap       : row = facility, col = location
//   gcp       : row = vertex, col = color, flags = color in use
struct Encoding {
  ProblemKind kind = ProblemKind::kMcp;
  std::size_t n_row = 0;
  std::size_t n_col = 1;
  std::size_t n_flag = 0;

  std::size_t n_spin() const noexcept { return n_row * n_col + n_flag; }
  // Throw std::out_of_range outside the declared domain.
  std::size_t index(std::size_t row, std::size_t col) const;
  std::size_t flag_index(std::size_t k) const;

  struct Slot {
    bool is_flag = false;
    std::size_t row = 0;  // flag number when is_flag
    std::size_t col = 0;
    friend bool operator==(const Slot&, const Slot&) = default;
  };
  Slot locate(std::size_t spin) const;
};

struct BuiltProblem {
  QuboModel model;
  Encoding encoding;
};

struct DecodedSolution {
  ProblemKind kind = ProblemKind::kMcp;
  // Table sign convention (see file comment). For an infeasible TSP or QAP
  // state no tour/assignment exists and this is empty.
  std::optional<double> objective;
  bool feasible = false;
  // Partition side, selected flag, tour (cities in visiting order, starting
  // at the fixed city), location of each facility, or color of each vertex
  // (-1 where undefined).
  std::vector<int> witness;
  // Violated native constraints: adjacent selected pairs, non-one-hot rows
  // and columns, or monochromatic edges plus uncolored/multicolored vertices.
  std::size_t violations = 0;
  // GCP only: flags that disagree with actual color use. Reported, never
  // counted as infeasibility.
  std::size_t flag_mismatches = 0;
};

BuiltProblem build_mcp(const WeightedGraph& g);
DecodedSolution decode_mcp(const WeightedGraph& g, std::span<const std::uint8_t> s);

inline constexpr double kMispPenalty = 2.0;
// Edge weights are ignored; an edge only marks a conflict.
BuiltProblem build_misp(const WeightedGraph& g, double penalty = kMispPenalty);
DecodedSolution decode_misp(const WeightedGraph& g, std::span<const std::uint8_t> s);

// max_i sum_{j != i} d(i, j) / (n - 1).
double tsp_penalty(const TspInstance& inst);
BuiltProblem build_tsp(const TspInstance& inst);
DecodedSolution decode_tsp(const TspInstance& inst, std::span<const std::uint8_t> s,
                           const Encoding& enc);
// Cost of a closed tour given as a city permutation.
double tour_length(const TspInstance& inst, std::span<const int> tour);

// max over (i, j) of sum_k f(i, k) * sum_l d(j, l) / (n - 1).
double qap_penalty(const QapInstance& inst);
BuiltProblem build_qap(const QapInstance& inst);
DecodedSolution decode_qap(const QapInstance& inst, std::span<const std::uint8_t> s,
                           const Encoding& enc);
// sum_{i,k} f(i, k) d(p[i], p[k]), both orderings counted.
double assignment_cost(const QapInstance& inst, std::span<const int> location);

inline constexpr double kGcpPenalty = 2.0;
// n_color defaults to max degree + 1. Throws std::invalid_argument for 0.
BuiltProblem build_gcp(const WeightedGraph& g, std::optional<std::size_t> n_color = {});
DecodedSolution decode_gcp(const WeightedGraph& g, std::span<const std::uint8_t> s,
                           const Encoding& enc);

// max{0, 1 - |(bks - sol) / bks|}. Throws std::domain_error when bks == 0.
double accuracy(double bks, double sol);

}  // namespace amfd

#endif  // AMFD_PROBLEMS_HPP_
