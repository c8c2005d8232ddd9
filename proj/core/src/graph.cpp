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

#include "amfd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace amfd {
namespace {

void CheckMatrix(const SquareMatrix& m, const char* what, bool nonnegative) {
  if (m.data.size() != m.n * m.n) {
    throw std::invalid_argument(std::string(what) + ": matrix storage size mismatch");
  }
  for (std::size_t i = 0; i < m.n; ++i) {
    if (m(i, i) != 0.0) {
      throw std::invalid_argument(std::string(what) + ": nonzero diagonal at " +
                                  std::to_string(i));
    }
  }
  for (double v : m.data) {
    if (!std::isfinite(v) || (nonnegative && v < 0.0)) {
      throw std::invalid_argument(std::string(what) + ": entries must be finite" +
                                  (nonnegative ? " and nonnegative" : ""));
    }
  }
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n_vertex, std::vector<Edge> edges)
    : n_vertex_(n_vertex), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n_vertex_ || e.v >= n_vertex_) {
      throw std::invalid_argument("graph: vertex out of range");
    }
    if (!std::isfinite(e.weight)) throw std::invalid_argument("graph: non-finite weight");
    if (e.u < e.v) std::swap(e.u, e.v);
  }
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_) keys.emplace_back(e.u, e.v);
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("graph: duplicate edge");
  }
}

std::vector<std::size_t> WeightedGraph::degrees() const {
  std::vector<std::size_t> deg(n_vertex_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::size_t WeightedGraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

WeightedGraph WeightedGraph::Complement() const {
  std::vector<bool> adjacent(n_vertex_ * n_vertex_, false);
  for (const Edge& e : edges_) adjacent[e.u * n_vertex_ + e.v] = true;
  std::vector<Edge> out;
  for (std::size_t u = 1; u < n_vertex_; ++u) {
    for (std::size_t v = 0; v < u; ++v) {
      if (!adjacent[u * n_vertex_ + v]) out.push_back(Edge{u, v, 1.0});
    }
  }
  WeightedGraph g;
  g.n_vertex_ = n_vertex_;
  g.edges_ = std::move(out);
  return g;
}

TspInstance::TspInstance(SquareMatrix distance) : distance_(std::move(distance)) {
  if (distance_.n < 3) throw std::invalid_argument("tsp: need at least 3 cities");
  CheckMatrix(distance_, "tsp distance", true);
}

QapInstance::QapInstance(SquareMatrix flow, SquareMatrix distance)
    : flow_(std::move(flow)), distance_(std::move(distance)) {
  if (flow_.n < 2) throw std::invalid_argument("qap: need at least 2 facilities");
  if (flow_.n != distance_.n) throw std::invalid_argument("qap: flow/distance size mismatch");
  CheckMatrix(flow_, "qap flow", false);
  CheckMatrix(distance_, "qap distance", false);
}

}  // namespace amfd
