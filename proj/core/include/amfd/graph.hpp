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

// Native problem instances: weighted graphs, TSP distance matrices and QAP
// flow/distance pairs. Vertices, cities and facilities are 0-based here; the
// file parsers translate from the 1-based benchmark formats.

#ifndef AMFD_GRAPH_HPP_
#define AMFD_GRAPH_HPP_

#include <cstddef>
#include <vector>

namespace amfd {

struct Edge {
  std::size_t u;  // larger endpoint
  std::size_t v;  // smaller endpoint
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Endpoints may come in either order and are stored with u > v. Throws
  // std::invalid_argument on self-loops, out-of-range vertices and repeated
  // unordered pairs.
  WeightedGraph(std::size_t n_vertex, std::vector<Edge> edges);

  std::size_t n_vertex() const noexcept { return n_vertex_; }
  std::size_t n_edge() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;

  // Unit-weight graph on the same vertices with an edge exactly where this
  // one has none.
  WeightedGraph Complement() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t n_vertex_ = 0;
  std::vector<Edge> edges_;
};

// Dense row-major matrix with bounds-free access.
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t size) : n(size), data(size * size, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

class TspInstance {
 public:
  TspInstance() = default;
  // Requires n >= 3, zero diagonal, finite nonnegative costs. Asymmetric
  // costs are kept as given.
  explicit TspInstance(SquareMatrix distance);

  std::size_t n_city() const noexcept { return distance_.n; }
  double d(std::size_t i, std::size_t j) const { return distance_(i, j); }
  const SquareMatrix& distance() const noexcept { return distance_; }

  friend bool operator==(const TspInstance&, const TspInstance&) = default;

 private:
  SquareMatrix distance_;
};

class QapInstance {
 public:
  QapInstance() = default;
  // Requires n >= 2, equal sizes, zero diagonals and finite entries.
  QapInstance(SquareMatrix flow, SquareMatrix distance);

  std::size_t n() const noexcept { return flow_.n; }
  double f(std::size_t i, std::size_t k) const { return flow_(i, k); }
  double d(std::size_t j, std::size_t l) const { return distance_(j, l); }
  const SquareMatrix& flow() const noexcept { return flow_; }
  const SquareMatrix& distance() const noexcept { return distance_; }

  friend bool operator==(const QapInstance&, const QapInstance&) = default;

 private:
  SquareMatrix flow_;
  SquareMatrix distance_;
};

}  // namespace amfd

#endif  // AMFD_GRAPH_HPP_
