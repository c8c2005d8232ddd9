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

// Readers for the benchmark file formats:
//
//   Gset           "n m" then m lines "i j w"              -> max-cut
//   DIMACS clique  "c ..." / "p edge n m" / "e i j"       -> independent set
//                  (complemented)
//   TSPLIB         keyword header, EUC_2D coordinates or an explicit
//                  EDGE_WEIGHT_SECTION                     -> TSP
//   QAPLIB         n, flow matrix, distance matrix         -> QAP
//   DIMACS .col    same grammar as the clique files        -> coloring
//
// Every reader throws ParseError on malformed input and never crashes.

#ifndef AMFD_INGEST_HPP_
#define AMFD_INGEST_HPP_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "amfd/graph.hpp"
#include "amfd/problems.hpp"

namespace amfd {

class ParseError : public std::runtime_error {
 public:
  // line == 0 when the problem is not tied to one line.
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Non-fatal oddities found while parsing (deduplicated edges, zeroed
// diagonals).
using Warnings = std::vector<std::string>;

WeightedGraph parse_gset(std::string_view text);

// The edge-line count must equal the declared m. Repeated pairs are
// deduplicated with a warning. With complement = true the result is the
// complement graph.
WeightedGraph parse_dimacs_clique(std::string_view text, bool complement,
                                  Warnings* warnings = nullptr);

// EUC_2D (TSPLIB nearest-integer rounding) and EXPLICIT matrices in
// FULL_MATRIX, UPPER_ROW, LOWER_ROW, UPPER_DIAG_ROW or LOWER_DIAG_ROW form.
TspInstance parse_tsplib(std::string_view text);

// The first matrix is the flow, the second the distance. A leading line of
// two integers "n value" is accepted. Nonzero diagonals are zeroed with a
// warning.
QapInstance parse_qaplib(std::string_view text, Warnings* warnings = nullptr);

WeightedGraph parse_dimacs_col(std::string_view text, Warnings* warnings = nullptr);

struct ParsedInstance {
  std::string name;
  ProblemKind kind = ProblemKind::kMcp;
  std::variant<WeightedGraph, TspInstance, QapInstance> data;
  // Sizes as declared by the file header (vertices/cities/facilities and
  // edges; declared_edges is 0 for TSP and QAP).
  std::size_t declared_size = 0;
  std::size_t declared_edges = 0;
  Warnings warnings;
};

// Dispatches on kind: mcp -> Gset, misp -> complemented clique file,
// tsp -> TSPLIB, qap -> QAPLIB, gcp -> .col.
ParsedInstance parse_instance(std::string_view text, ProblemKind kind,
                              std::string name = {});

// Reads the file and names the instance after its stem. Throws ParseError
// prefixed with the path.
ParsedInstance load_instance(const std::filesystem::path& path, ProblemKind kind);

// File stem with a recognised benchmark extension removed, so
// "DSJC1000.5.clq" -> "DSJC1000.5" and "G1" -> "G1".
std::string instance_name_from_path(const std::filesystem::path& path);

BuiltProblem build_problem(const ParsedInstance& inst,
                           std::optional<std::size_t> n_color = {});
DecodedSolution decode_problem(const ParsedInstance& inst,
                               std::span<const std::uint8_t> s, const Encoding& enc);

}  // namespace amfd

#endif  // AMFD_INGEST_HPP_
