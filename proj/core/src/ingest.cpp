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

#include "amfd/ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace amfd {
namespace {

std::string LineSuffix(std::size_t line) {
  return line ? " (line " + std::to_string(line) + ")" : std::string();
}

std::vector<std::string_view> SplitTokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    const std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on '\n' and tracks 1-based line numbers; '\r' is treated as
// whitespace by the tokenizer.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool Next(std::string_view* line) {
    if (pos_ >= text_.size()) return false;
    const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
    *line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++number_;
    return true;
  }
  std::size_t number() const noexcept { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

bool TryDouble(std::string_view tok, double* out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, *out);
  return ec == std::errc() && ptr == end && std::isfinite(*out);
}

double ParseDouble(std::string_view tok, std::size_t line) {
  double v = 0.0;
  if (!TryDouble(tok, &v)) {
    throw ParseError("expected a number, got '" + std::string(tok) + "'", line);
  }
  return v;
}

std::size_t ParseCount(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'", line);
  }
  return v;
}

// 1-based vertex id to 0-based index.
std::size_t ParseVertex(std::string_view tok, std::size_t n, std::size_t line) {
  const std::size_t v = ParseCount(tok, line);
  if (v < 1 || v > n) {
    throw ParseError("vertex " + std::string(tok) + " outside [1, " + std::to_string(n) + "]",
                     line);
  }
  return v - 1;
}

std::pair<std::size_t, std::size_t> PairKey(std::size_t a, std::size_t b) {
  return a > b ? std::make_pair(a, b) : std::make_pair(b, a);
}

struct DimacsGraph {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::size_t duplicates = 0;
};

DimacsGraph ReadDimacs(std::string_view text) {
  DimacsGraph g;
  bool have_problem = false;
  std::size_t edge_lines = 0;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  LineReader reader(text);
  std::string_view line;
  while (reader.Next(&line)) {
    const std::size_t ln = reader.number();
    const auto tok = SplitTokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_problem) throw ParseError("second problem line", ln);
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError("malformed problem line, expected 'p edge n m'", ln);
      }
      g.n = ParseCount(tok[2], ln);
      g.m = ParseCount(tok[3], ln);
      have_problem = true;
    } else if (tok[0] == "e") {
      if (!have_problem) throw ParseError("edge line before the problem line", ln);
      if (tok.size() != 3) throw ParseError("malformed edge line, expected 'e i j'", ln);
      const std::size_t a = ParseVertex(tok[1], g.n, ln);
      const std::size_t b = ParseVertex(tok[2], g.n, ln);
      if (a == b) throw ParseError("self-loop", ln);
      ++edge_lines;
      if (!seen.insert(PairKey(a, b)).second) {
        ++g.duplicates;
        continue;
      }
      g.edges.push_back(Edge{a, b, 1.0});
    } else {
      throw ParseError("unrecognised line type '" + std::string(tok[0]) + "'", ln);
    }
  }
  if (!have_problem) throw ParseError("missing problem line 'p edge n m'");
  if (edge_lines != g.m) {
    throw ParseError("declared " + std::to_string(g.m) + " edges, found " +
                     std::to_string(edge_lines));
  }
  return g;
}

void Warn(Warnings* warnings, std::string message) {
  if (warnings) warnings->push_back(std::move(message));
}

// Numeric tokens of the lines following a TSPLIB section keyword, up to the
// next line that starts with a non-numeric token.
struct Section {
  std::vector<double> values;
  std::size_t first_line = 0;
};

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::size_t TriangleCount(std::size_t n, bool with_diagonal) {
  return with_diagonal ? n * (n + 1) / 2 : n * (n - 1) / 2;
}

SquareMatrix ExplicitMatrix(const std::string& format, std::size_t n, const Section& sec) {
  const auto& v = sec.values;
  auto need = [&](std::size_t count) {
    if (v.size() != count) {
      throw ParseError("EDGE_WEIGHT_SECTION holds " + std::to_string(v.size()) +
                           " values, " + format + " of dimension " + std::to_string(n) +
                           " needs " + std::to_string(count),
                       sec.first_line);
    }
  };
  std::size_t k = 0;
  if (format == "FULL_MATRIX") {
    need(n * n);
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v[k++];
    }
    return m;
  }
  const bool upper = format == "UPPER_ROW" || format == "UPPER_DIAG_ROW";
  const bool diag = format == "UPPER_DIAG_ROW" || format == "LOWER_DIAG_ROW";
  if (!upper && format != "LOWER_ROW" && format != "LOWER_DIAG_ROW") {
    throw ParseError("unsupported format: EDGE_WEIGHT_FORMAT " + format);
  }
  need(TriangleCount(n, diag));
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = upper ? (diag ? i : i + 1) : 0;
    const std::size_t hi = upper ? n : (diag ? i + 1 : i);
    for (std::size_t j = lo; j < hi; ++j) {
      m(i, j) = v[k];
      m(j, i) = v[k];
      ++k;
    }
  }
  return m;
}

SquareMatrix Euc2dMatrix(std::size_t n, const Section& sec) {
  if (sec.values.size() != 3 * n) {
    throw ParseError("NODE_COORD_SECTION holds " + std::to_string(sec.values.size()) +
                         " values, expected " + std::to_string(3 * n),
                     sec.first_line);
  }
  std::vector<double> x(n), y(n);
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    const double id = sec.values[3 * r];
    if (id != std::floor(id) || id < 1 || id > static_cast<double>(n) ||
        seen[static_cast<std::size_t>(id) - 1]) {
      throw ParseError("bad or repeated node id in NODE_COORD_SECTION", sec.first_line);
    }
    const std::size_t k = static_cast<std::size_t>(id) - 1;
    seen[k] = true;
    x[k] = sec.values[3 * r + 1];
    y[k] = sec.values[3 * r + 2];
  }
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double dx = x[i] - x[j], dy = y[i] - y[j];
      // TSPLIB nint.
      m(i, j) = std::floor(std::sqrt(dx * dx + dy * dy) + 0.5);
    }
  }
  return m;
}

// The complement is built through an n x n adjacency bitmap.
constexpr std::size_t kMaxComplementVertices = 20000;

constexpr std::array<std::string_view, 6> kKnownExtensions = {".txt", ".clq", ".col",
                                                              ".tsp", ".dat", ".gset"};

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error("parse error: " + what + LineSuffix(line)), line_(line) {}

WeightedGraph parse_gset(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (reader.Next(&line)) {
    const std::size_t ln = reader.number();
    const auto tok = SplitTokens(line);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 2) throw ParseError("expected header 'n m'", ln);
      n = ParseCount(tok[0], ln);
      m = ParseCount(tok[1], ln);
      have_header = true;
      continue;
    }
    if (tok.size() != 3) throw ParseError("expected edge line 'i j w'", ln);
    const std::size_t a = ParseVertex(tok[0], n, ln);
    const std::size_t b = ParseVertex(tok[1], n, ln);
    const double w = ParseDouble(tok[2], ln);
    if (a == b) throw ParseError("self-loop", ln);
    if (!seen.insert(PairKey(a, b)).second) throw ParseError("duplicate edge", ln);
    edges.push_back(Edge{a, b, w});
  }
  if (!have_header) throw ParseError("empty input, expected header 'n m'");
  if (edges.size() != m) {
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph parse_dimacs_clique(std::string_view text, bool complement,
                                  Warnings* warnings) {
  DimacsGraph g = ReadDimacs(text);
  if (complement && g.n > kMaxComplementVertices) {
    throw ParseError("refusing to complement a graph with " + std::to_string(g.n) +
                     " vertices (limit " + std::to_string(kMaxComplementVertices) + ")");
  }
  if (g.duplicates) {
    Warn(warnings, "ignored " + std::to_string(g.duplicates) + " repeated edge lines");
  }
  WeightedGraph graph(g.n, std::move(g.edges));
  return complement ? graph.Complement() : graph;
}

WeightedGraph parse_dimacs_col(std::string_view text, Warnings* warnings) {
  return parse_dimacs_clique(text, false, warnings);
}

TspInstance parse_tsplib(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  std::size_t dimension = 0;
  std::string type = "TSP", weight_type, weight_format;
  Section coords, weights;
  bool have_coords = false, have_weights = false;
  // Section currently being filled, if any.
  Section* open = nullptr;
  Section ignored;

  while (reader.Next(&line)) {
    const std::size_t ln = reader.number();
    const auto tok = SplitTokens(line);
    if (tok.empty()) continue;
    double first = 0.0;
    if (open && TryDouble(tok[0], &first)) {
      for (auto t : tok) open->values.push_back(ParseDouble(t, ln));
      continue;
    }
    open = nullptr;
    const std::string_view trimmed = Trim(line);
    if (trimmed == "EOF") break;
    // "KEY : VALUE", "KEY: VALUE" or "KEY VALUE".
    const std::size_t colon = trimmed.find(':');
    const std::size_t split =
        colon != std::string_view::npos ? colon : std::min(trimmed.size(), tok[0].size());
    const std::string key = Upper(Trim(trimmed.substr(0, split)));
    const std::string value(Trim(trimmed.substr(std::min(trimmed.size(), split + 1))));
    if (key == "NAME" || key == "COMMENT") continue;
    if (key == "TYPE") {
      type = Upper(value);
      if (type != "TSP" && type != "ATSP") throw ParseError("unsupported format: TYPE " + value, ln);
    } else if (key == "DIMENSION") {
      dimension = ParseCount(value, ln);
    } else if (key == "EDGE_WEIGHT_TYPE") {
      weight_type = Upper(value);
      if (weight_type != "EUC_2D" && weight_type != "EXPLICIT") {
        throw ParseError("unsupported format: EDGE_WEIGHT_TYPE " + value, ln);
      }
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      weight_format = Upper(value);
    } else if (key == "DISPLAY_DATA_TYPE" || key == "NODE_COORD_TYPE") {
      continue;
    } else if (key == "NODE_COORD_SECTION") {
      open = &coords;
      have_coords = true;
      coords.first_line = ln;
    } else if (key == "EDGE_WEIGHT_SECTION") {
      open = &weights;
      have_weights = true;
      weights.first_line = ln;
    } else if (key == "DISPLAY_DATA_SECTION") {
      open = &ignored;
    } else {
      throw ParseError("unsupported keyword '" + key + "'", ln);
    }
  }

  if (dimension == 0) throw ParseError("missing DIMENSION");
  if (weight_type.empty()) throw ParseError("missing EDGE_WEIGHT_TYPE");
  SquareMatrix d;
  if (weight_type == "EUC_2D") {
    if (!have_coords) throw ParseError("EUC_2D instance without NODE_COORD_SECTION");
    d = Euc2dMatrix(dimension, coords);
  } else {
    if (!have_weights) throw ParseError("EXPLICIT instance without EDGE_WEIGHT_SECTION");
    if (weight_format.empty()) throw ParseError("missing EDGE_WEIGHT_FORMAT");
    d = ExplicitMatrix(weight_format, dimension, weights);
  }
  try {
    return TspInstance(std::move(d));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

QapInstance parse_qaplib(std::string_view text, Warnings* warnings) {
  LineReader reader(text);
  std::string_view line;
  std::vector<std::string_view> tokens;
  std::size_t first_line_tokens = 0;
  while (reader.Next(&line)) {
    const auto tok = SplitTokens(line);
    if (tok.empty()) continue;
    if (tokens.empty()) first_line_tokens = tok.size();
    tokens.insert(tokens.end(), tok.begin(), tok.end());
  }
  if (tokens.empty()) throw ParseError("empty input, expected n");
  const std::size_t n = ParseCount(tokens[0], 1);
  if (n < 2) throw ParseError("n must be at least 2", 1);
  if (n > 100000) throw ParseError("n is implausibly large", 1);
  const std::size_t body = 2 * n * n;
  std::size_t start = 1;
  if (first_line_tokens == 2 && tokens.size() == body + 2) start = 2;
  if (tokens.size() < start + body) {
    throw ParseError("truncated input: expected " + std::to_string(body) +
                     " matrix entries, found " + std::to_string(tokens.size() - start));
  }
  if (tokens.size() > start + body) {
    throw ParseError("surplus input: " + std::to_string(tokens.size() - start - body) +
                     " extra tokens after the distance matrix");
  }
  SquareMatrix flow(n), dist(n);
  for (std::size_t k = 0; k < n * n; ++k) {
    flow.data[k] = ParseDouble(tokens[start + k], 0);
    dist.data[k] = ParseDouble(tokens[start + n * n + k], 0);
  }
  std::size_t zeroed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    zeroed += flow(i, i) != 0.0;
    zeroed += dist(i, i) != 0.0;
    flow(i, i) = 0.0;
    dist(i, i) = 0.0;
  }
  if (zeroed) Warn(warnings, "zeroed " + std::to_string(zeroed) + " nonzero diagonal entries");
  return QapInstance(std::move(flow), std::move(dist));
}

ParsedInstance parse_instance(std::string_view text, ProblemKind kind, std::string name) {
  ParsedInstance out;
  out.name = std::move(name);
  out.kind = kind;
  switch (kind) {
    case ProblemKind::kMcp: {
      WeightedGraph g = parse_gset(text);
      out.declared_size = g.n_vertex();
      out.declared_edges = g.n_edge();
      out.data = std::move(g);
      break;
    }
    case ProblemKind::kMisp:
    case ProblemKind::kGcp: {
      const bool complement = kind == ProblemKind::kMisp;
      WeightedGraph g = parse_dimacs_clique(text, false, &out.warnings);
      out.declared_size = g.n_vertex();
      out.declared_edges = g.n_edge();
      if (complement && g.n_vertex() > kMaxComplementVertices) {
        throw ParseError("refusing to complement a graph with " +
                         std::to_string(g.n_vertex()) + " vertices");
      }
      out.data = complement ? g.Complement() : std::move(g);
      break;
    }
    case ProblemKind::kTsp: {
      TspInstance t = parse_tsplib(text);
      out.declared_size = t.n_city();
      out.data = std::move(t);
      break;
    }
    case ProblemKind::kQap: {
      QapInstance q = parse_qaplib(text, &out.warnings);
      out.declared_size = q.n();
      out.data = std::move(q);
      break;
    }
  }
  return out;
}

std::string instance_name_from_path(const std::filesystem::path& path) {
  std::string name = path.filename().string();
  for (std::string_view ext : kKnownExtensions) {
    if (name.size() > ext.size()) {
      std::string tail = name.substr(name.size() - ext.size());
      std::transform(tail.begin(), tail.end(), tail.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (tail == ext) return name.substr(0, name.size() - ext.size());
    }
  }
  return name;
}

ParsedInstance load_instance(const std::filesystem::path& path, ProblemKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str(), kind, instance_name_from_path(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

BuiltProblem build_problem(const ParsedInstance& inst, std::optional<std::size_t> n_color) {
  switch (inst.kind) {
    case ProblemKind::kMcp:
      return build_mcp(std::get<WeightedGraph>(inst.data));
    case ProblemKind::kMisp:
      return build_misp(std::get<WeightedGraph>(inst.data));
    case ProblemKind::kTsp:
      return build_tsp(std::get<TspInstance>(inst.data));
    case ProblemKind::kQap:
      return build_qap(std::get<QapInstance>(inst.data));
    case ProblemKind::kGcp:
      return build_gcp(std::get<WeightedGraph>(inst.data), n_color);
  }
  throw std::logic_error("build_problem: unknown kind");
}

DecodedSolution decode_problem(const ParsedInstance& inst, std::span<const std::uint8_t> s,
                               const Encoding& enc) {
  switch (inst.kind) {
    case ProblemKind::kMcp:
      return decode_mcp(std::get<WeightedGraph>(inst.data), s);
    case ProblemKind::kMisp:
      return decode_misp(std::get<WeightedGraph>(inst.data), s);
    case ProblemKind::kTsp:
      return decode_tsp(std::get<TspInstance>(inst.data), s, enc);
    case ProblemKind::kQap:
      return decode_qap(std::get<QapInstance>(inst.data), s, enc);
    case ProblemKind::kGcp:
      return decode_gcp(std::get<WeightedGraph>(inst.data), s, enc);
  }
  throw std::logic_error("decode_problem: unknown kind");
}

}  // namespace amfd
