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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "support/test_support.hpp"

namespace amfd {
namespace {

using testing::Gen;
using testing::StateFromMask;

WeightedGraph TriangleGraph() { return WeightedGraph(3, {{1, 0, 1}, {2, 1, 1}, {2, 0, 1}}); }
WeightedGraph PathGraph() { return WeightedGraph(3, {{1, 0, 1}, {2, 1, 1}}); }

TspInstance ThreeCities() {
  SquareMatrix d(3);
  d(0, 1) = d(1, 0) = 1;
  d(0, 2) = d(2, 0) = 2;
  d(1, 2) = d(2, 1) = 3;
  return TspInstance(d);
}

QapInstance TwoFacilities() {
  SquareMatrix f(2), d(2);
  f(0, 1) = f(1, 0) = 1;
  d(0, 1) = d(1, 0) = 3;
  return QapInstance(f, d);
}

TspInstance RandomTsp(Gen& g, std::size_t n, bool symmetric) {
  SquareMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (symmetric && j < i) {
        d(i, j) = d(j, i);
      } else {
        d(i, j) = std::round(g.Uniform(1, 20));
      }
    }
  }
  return TspInstance(d);
}

QapInstance RandomQap(Gen& g, std::size_t n) {
  SquareMatrix f(n), d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      f(i, j) = std::round(g.Uniform(0, 5));
      d(i, j) = std::round(g.Uniform(1, 9));
    }
  }
  return QapInstance(f, d);
}

double Sq(double v) { return v * v; }

// The TSP Hamiltonian written straight from its definition.
double OracleTspEnergy(const TspInstance& inst, const SpinVector& s) {
  const std::size_t n = inst.n_city(), m = n - 1;
  auto x = [&](std::size_t i, std::size_t k) { return double(s[i * m + k]); };
  const double a = tsp_penalty(inst);
  double e = 0.0;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) e += inst.d(i, j) * x(i, k) * x(j, k + 1);
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    e += inst.d(n - 1, i) * x(i, 0) + inst.d(i, n - 1) * x(i, m - 1);
  }
  for (std::size_t k = 0; k < m; ++k) {
    double col = 0.0;
    for (std::size_t i = 0; i < m; ++i) col += x(i, k);
    e += a * Sq(1 - col);
  }
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t k = 0; k < m; ++k) row += x(i, k);
    e += a * Sq(1 - row);
  }
  return e;
}

double OracleQapEnergy(const QapInstance& inst, const SpinVector& s) {
  const std::size_t n = inst.n();
  auto x = [&](std::size_t i, std::size_t j) { return double(s[i * n + j]); };
  const double a = qap_penalty(inst);
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) e += inst.f(i, k) * inst.d(j, l) * x(i, j) * x(k, l);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row += x(i, j);
      col += x(j, i);
    }
    e += a * Sq(1 - row) + a * Sq(1 - col);
  }
  return e;
}

double OracleGcpEnergy(const WeightedGraph& g, std::size_t colors, const SpinVector& s) {
  const std::size_t v = g.n_vertex();
  auto x = [&](std::size_t i, std::size_t k) { return double(s[i * colors + k]); };
  auto y = [&](std::size_t k) { return double(s[v * colors + k]); };
  double e = 0.0;
  for (std::size_t k = 0; k < colors; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < v; ++i) sum += x(i, k);
    e += y(k) + kGcpPenalty * (1 - y(k)) * sum;
    for (const Edge& ed : g.edges()) e += kGcpPenalty * x(ed.u, k) * x(ed.v, k);
  }
  for (std::size_t i = 0; i < v; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < colors; ++k) sum += x(i, k);
    e += kGcpPenalty * Sq(1 - sum);
  }
  return e;
}

SpinVector TourEncoding(const Encoding& enc, const std::vector<int>& order) {
  // order lists the free cities by position.
  SpinVector s(enc.n_spin(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) s[enc.index(order[k], k)] = 1;
  return s;
}

TEST(Mcp, HandValues) {
  const BuiltProblem b = build_mcp(WeightedGraph(2, {{1, 0, 1}}));
  EXPECT_EQ(energy(b.model, SpinVector{0, 1}), -1.0);
  const BuiltProblem t = build_mcp(TriangleGraph());
  EXPECT_EQ(energy(t.model, SpinVector{1, 1, 1}), 0.0);
  EXPECT_EQ(testing::BruteForceMinimum(t.model).min_energy, -2.0);
  EXPECT_EQ(*decode_mcp(TriangleGraph(), SpinVector{1, 1, 1}).objective, -0.0);
  EXPECT_EQ(*decode_mcp(TriangleGraph(), SpinVector{1, 0, 0}).objective, -2.0);
}

TEST(Mcp, EnergyIsMinusCutOnEveryState) {
  Gen g(61);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph graph = testing::RandomGraph(g, g.Int(2, 10), 0.5, true);
    const BuiltProblem b = build_mcp(graph);
    EXPECT_EQ(b.model.c(), 0.0);
    for (std::uint64_t mask = 0; mask < (1u << graph.n_vertex()); ++mask) {
      const SpinVector s = StateFromMask(mask, graph.n_vertex());
      double cut = 0.0;
      for (const Edge& e : graph.edges()) cut += s[e.u] != s[e.v] ? e.weight : 0.0;
      const DecodedSolution d = decode_mcp(graph, s);
      EXPECT_TRUE(d.feasible);
      EXPECT_NEAR(*d.objective, -cut, 1e-12);
      EXPECT_NEAR(energy(b.model, s), -cut, 1e-12);
    }
  }
}

TEST(Misp, HandValues) {
  const BuiltProblem b = build_misp(PathGraph());
  EXPECT_EQ(energy(b.model, SpinVector{1, 0, 1}), -2.0);
  EXPECT_EQ(energy(b.model, SpinVector{1, 1, 0}), 0.0);
  const auto best = testing::BruteForceMinimum(b.model);
  EXPECT_EQ(best.min_energy, -2.0);
  ASSERT_EQ(best.argmin.size(), 1u);
  EXPECT_EQ(best.argmin[0], 0b101u);
  EXPECT_EQ(energy(build_misp(WeightedGraph(5, {})).model, SpinVector(5, 1)), -5.0);

  const DecodedSolution bad = decode_misp(PathGraph(), SpinVector{1, 1, 0});
  EXPECT_FALSE(bad.feasible);
  EXPECT_EQ(*bad.objective, -2.0);
  const DecodedSolution empty = decode_misp(PathGraph(), SpinVector{0, 0, 0});
  EXPECT_TRUE(empty.feasible);
  EXPECT_EQ(*empty.objective, 0.0);
}

TEST(Misp, EnergyIsObjectivePlusPenalty) {
  Gen g(62);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph graph = testing::RandomGraph(g, g.Int(2, 10), 0.4);
    const BuiltProblem b = build_misp(graph);
    for (std::uint64_t mask = 0; mask < (1u << graph.n_vertex()); ++mask) {
      const SpinVector s = StateFromMask(mask, graph.n_vertex());
      const DecodedSolution d = decode_misp(graph, s);
      EXPECT_NEAR(energy(b.model, s), *d.objective + kMispPenalty * double(d.violations), 1e-12);
      EXPECT_EQ(d.feasible, d.violations == 0);
    }
  }
}

TEST(Misp, PenaltyTwoMakesEveryMinimizerIndependent) {
  Gen g(63);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightedGraph graph = testing::RandomGraph(g, g.Int(1, 8), g.Uniform(0, 1));
    const BuiltProblem b = build_misp(graph);
    const auto best = testing::BruteForceMinimum(b.model);
    for (std::uint64_t mask : best.argmin) {
      EXPECT_TRUE(decode_misp(graph, StateFromMask(mask, graph.n_vertex())).feasible);
    }
  }
}

TEST(Tsp, HandValues) {
  const TspInstance inst = ThreeCities();
  const BuiltProblem b = build_tsp(inst);
  EXPECT_EQ(b.model.n_spin(), 4u);
  // Tour 3 -> 1 -> 2 -> 3 in 1-based names: cities 0 then 1 after the depot.
  const SpinVector s = TourEncoding(b.encoding, {0, 1});
  EXPECT_EQ(energy(b.model, s), 6.0);
  const DecodedSolution d = decode_tsp(inst, s, b.encoding);
  EXPECT_TRUE(d.feasible);
  EXPECT_EQ(*d.objective, 6.0);
  EXPECT_EQ(d.witness, (std::vector<int>{2, 0, 1}));
  const double a = tsp_penalty(inst);
  EXPECT_EQ(a, 2.5);  // city 2: (2 + 3) / 2
  EXPECT_EQ(energy(b.model, SpinVector(4, 0)), 2 * a * 2);
  EXPECT_EQ(testing::BruteForceMinimum(b.model).min_energy, 6.0);
  EXPECT_THROW(TspInstance(SquareMatrix(2)), std::invalid_argument);
}

TEST(Tsp, VariableCountForTwentyNineCities) {
  Gen g(64);
  EXPECT_EQ(build_tsp(RandomTsp(g, 29, true)).model.n_spin(), 784u);
}

TEST(Tsp, EnergyMatchesDefinitionOnEveryState) {
  Gen g(65);
  for (int trial = 0; trial < 6; ++trial) {
    const TspInstance inst = RandomTsp(g, 4, trial % 2 == 0);
    const BuiltProblem b = build_tsp(inst);
    double best_feasible = INFINITY;
    for (std::uint64_t mask = 0; mask < (1u << 9); ++mask) {
      const SpinVector s = StateFromMask(mask, 9);
      EXPECT_NEAR(energy(b.model, s), OracleTspEnergy(inst, s), 1e-9);
      const DecodedSolution d = decode_tsp(inst, s, b.encoding);
      if (d.feasible) {
        EXPECT_NEAR(energy(b.model, s), *d.objective, 1e-9);
        best_feasible = std::min(best_feasible, *d.objective);
      } else {
        EXPECT_FALSE(d.objective.has_value());
      }
    }
    // Shortest tour by permutation enumeration.
    std::vector<int> order{0, 1, 2};
    double best_tour = INFINITY;
    do {
      best_tour = std::min(best_tour, tour_length(inst, std::vector<int>{3, order[0], order[1], order[2]}));
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(best_feasible, best_tour);
    EXPECT_NEAR(testing::BruteForceMinimum(b.model).min_energy, best_tour, 1e-9);
  }
}

TEST(Tsp, DecodeRejectsEmptyPosition) {
  const TspInstance inst = ThreeCities();
  const BuiltProblem b = build_tsp(inst);
  const DecodedSolution d = decode_tsp(inst, SpinVector{1, 0, 1, 0}, b.encoding);
  EXPECT_FALSE(d.feasible);
  EXPECT_GT(d.violations, 0u);
}

TEST(Qap, HandValues) {
  const QapInstance inst = TwoFacilities();
  const BuiltProblem b = build_qap(inst);
  const SpinVector identity{1, 0, 0, 1}, swap{0, 1, 1, 0};
  EXPECT_EQ(energy(b.model, identity), 6.0);
  EXPECT_EQ(energy(b.model, swap), 6.0);
  EXPECT_EQ(*decode_qap(inst, identity, b.encoding).objective, 6.0);
  EXPECT_EQ(*decode_qap(inst, swap, b.encoding).objective, 6.0);
  EXPECT_EQ(energy(b.model, SpinVector(4, 0)), 2 * qap_penalty(inst) * 2);
  EXPECT_EQ(qap_penalty(inst), 3.0);
  EXPECT_FALSE(decode_qap(inst, SpinVector{1, 1, 0, 0}, b.encoding).feasible);
  EXPECT_EQ(testing::BruteForceMinimum(b.model).min_energy, 6.0);
}

TEST(Qap, EnergyMatchesDefinitionOnEveryState) {
  Gen g(66);
  for (int trial = 0; trial < 6; ++trial) {
    const QapInstance inst = RandomQap(g, 3);
    const BuiltProblem b = build_qap(inst);
    double best_feasible = INFINITY;
    for (std::uint64_t mask = 0; mask < (1u << 9); ++mask) {
      const SpinVector s = StateFromMask(mask, 9);
      EXPECT_NEAR(energy(b.model, s), OracleQapEnergy(inst, s), 1e-9);
      const DecodedSolution d = decode_qap(inst, s, b.encoding);
      if (d.feasible) {
        EXPECT_NEAR(energy(b.model, s), *d.objective, 1e-9);
        best_feasible = std::min(best_feasible, *d.objective);
      }
    }
    std::vector<int> perm{0, 1, 2};
    double best = INFINITY;
    do {
      best = std::min(best, assignment_cost(inst, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(best_feasible, best);
  }
}

TEST(Qap, VariableCount) {
  Gen g(67);
  EXPECT_EQ(build_qap(RandomQap(g, 32)).model.n_spin(), 1024u);
}

TEST(Gcp, HandValues) {
  const WeightedGraph edge(2, {{1, 0, 1}});
  const BuiltProblem b = build_gcp(edge, 2);
  EXPECT_EQ(b.model.n_spin(), 6u);
  // Vertex 0 color 0, vertex 1 color 1, both flags set.
  SpinVector s(6, 0);
  s[b.encoding.index(0, 0)] = 1;
  s[b.encoding.index(1, 1)] = 1;
  s[b.encoding.flag_index(0)] = 1;
  s[b.encoding.flag_index(1)] = 1;
  EXPECT_EQ(energy(b.model, s), 2.0);
  DecodedSolution d = decode_gcp(edge, s, b.encoding);
  EXPECT_TRUE(d.feasible);
  EXPECT_EQ(*d.objective, 2.0);
  EXPECT_EQ(d.flag_mismatches, 0u);

  SpinVector mono(6, 0);
  mono[b.encoding.index(0, 0)] = 1;
  mono[b.encoding.index(1, 0)] = 1;
  EXPECT_FALSE(decode_gcp(edge, mono, b.encoding).feasible);
  EXPECT_EQ(testing::BruteForceMinimum(b.model).min_energy, 2.0);

  const WeightedGraph single(1, {});
  const BuiltProblem one = build_gcp(single, 1);
  EXPECT_EQ(energy(one.model, SpinVector{1, 1}), 1.0);
  EXPECT_EQ(energy(one.model, SpinVector{0, 0}), 2.0);
  EXPECT_THROW(build_gcp(single, 0), std::invalid_argument);
}

TEST(Gcp, DefaultColorsIsMaxDegreePlusOne) {
  const BuiltProblem b = build_gcp(TriangleGraph());
  EXPECT_EQ(b.encoding.n_col, 3u);
  EXPECT_EQ(b.model.n_spin(), 3u * 3u + 3u);
}

TEST(Gcp, EnergyMatchesDefinitionOnEveryState) {
  Gen g(68);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph graph = testing::RandomGraph(g, 3, 0.6);
    const std::size_t colors = 2;
    const BuiltProblem b = build_gcp(graph, colors);
    for (std::uint64_t mask = 0; mask < (1u << b.model.n_spin()); ++mask) {
      const SpinVector s = StateFromMask(mask, b.model.n_spin());
      EXPECT_NEAR(energy(b.model, s), OracleGcpEnergy(graph, colors, s), 1e-9);
      const DecodedSolution d = decode_gcp(graph, s, b.encoding);
      if (d.feasible && d.flag_mismatches == 0) {
        EXPECT_NEAR(energy(b.model, s), *d.objective, 1e-9);
      }
    }
  }
}

TEST(EncodingLayout, RoundTripsEveryIndex) {
  for (const Encoding enc : {Encoding{ProblemKind::kTsp, 5, 5, 0},
                             Encoding{ProblemKind::kGcp, 4, 3, 3},
                             Encoding{ProblemKind::kMcp, 7, 1, 0}}) {
    for (std::size_t spin = 0; spin < enc.n_spin(); ++spin) {
      const Encoding::Slot slot = enc.locate(spin);
      EXPECT_EQ(slot.is_flag ? enc.flag_index(slot.row) : enc.index(slot.row, slot.col), spin);
    }
    EXPECT_THROW(enc.locate(enc.n_spin()), std::out_of_range);
    EXPECT_THROW(enc.index(enc.n_row, 0), std::out_of_range);
  }
}

TEST(Accuracy, TableValues) {
  EXPECT_NEAR(accuracy(-11624, -11593), 0.99733, 1e-5);
  EXPECT_EQ(accuracy(2020, 6012), 0.0);
  EXPECT_EQ(accuracy(130, 130), 1.0);
  EXPECT_THROW(accuracy(0, 1), std::domain_error);
}

TEST(Accuracy, ScaleInvariant) {
  Gen g(69);
  for (int trial = 0; trial < 200; ++trial) {
    const double bks = g.Uniform(-100, 100), sol = g.Uniform(-200, 200), k = g.Uniform(0.01, 50);
    if (bks == 0.0) continue;
    const double a = accuracy(bks, sol);
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, 1.0);
    EXPECT_NEAR(accuracy(k * bks, k * sol), a, 1e-12);
  }
}

TEST(ProblemKindNames, RoundTrip) {
  for (auto k : {ProblemKind::kMcp, ProblemKind::kMisp, ProblemKind::kTsp, ProblemKind::kQap,
                 ProblemKind::kGcp}) {
    EXPECT_EQ(parse_problem_kind(problem_name(k)), k);
  }
  EXPECT_FALSE(parse_problem_kind("sat").has_value());
}

TEST(WeightedGraphTest, ValidatesEdges) {
  EXPECT_THROW(WeightedGraph(2, {{1, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(2, {{2, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(3, {{1, 0, 1}, {0, 1, 1}}), std::invalid_argument);
  const WeightedGraph g(3, {{0, 2, 5}});
  EXPECT_EQ(g.edges()[0].u, 2u);
  EXPECT_EQ(g.max_degree(), 1u);
}

}  // namespace
}  // namespace amfd
