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

#ifndef AMFD_QUBO_HPP_
#define AMFD_QUBO_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace amfd {

// Binary assignment, every entry exactly 0 or 1.
using SpinVector = std::vector<std::uint8_t>;

// Mean-field spin expectations, every entry in [0, 1].
using MfVector = std::vector<double>;

// QUBO energy H(s) = h^T s + 1/2 s^T Q s + C over s in {0,1}^N.
//
// Q is dense, row-major, symmetric with a zero diagonal, so the quadratic part
// equals the lower-triangle double sum sum_i sum_{j<i} Q_ij s_i s_j. A
// compressed-row copy of the nonzeros is kept alongside for sparse models.
// Immutable after construction.
class QuboModel {
 public:
  // Validates symmetry, zero diagonal and dimensions; throws
  // std::invalid_argument otherwise.
  QuboModel(std::size_t n_spin, std::vector<double> q, std::vector<double> h,
            double c = 0.0);

  // Mirrors the strict upper triangle of `upper` (row-major N x N). Entries on
  // or below the diagonal must be zero.
  static QuboModel FromUpperTriangle(std::size_t n_spin,
                                     const std::vector<double>& upper,
                                     std::vector<double> h, double c = 0.0);

  std::size_t n_spin() const noexcept { return n_spin_; }
  double q(std::size_t i, std::size_t j) const { return q_[i * n_spin_ + j]; }
  std::span<const double> q_dense() const noexcept { return q_; }
  std::span<const double> q_row(std::size_t i) const {
    return std::span<const double>(q_).subspan(i * n_spin_, n_spin_);
  }
  std::span<const double> h() const noexcept { return h_; }
  double c() const noexcept { return c_; }

  // Compressed-row view of the off-diagonal nonzeros, columns ascending.
  std::size_t nnz() const noexcept { return values_.size(); }
  std::span<const std::uint32_t> row_columns(std::size_t i) const {
    return std::span<const std::uint32_t>(columns_).subspan(
        row_start_[i], row_start_[i + 1] - row_start_[i]);
  }
  std::span<const double> row_values(std::size_t i) const {
    return std::span<const double>(values_).subspan(
        row_start_[i], row_start_[i + 1] - row_start_[i]);
  }
  // True when mean-field products should walk the compressed rows.
  bool prefers_sparse() const noexcept { return prefers_sparse_; }

  // Same Q and h multiplied by `factor`; C unchanged.
  QuboModel Scaled(double factor) const;

 private:
  void BuildRows();

  std::size_t n_spin_;
  std::vector<double> q_;
  std::vector<double> h_;
  double c_;
  std::vector<std::size_t> row_start_;
  std::vector<std::uint32_t> columns_;
  std::vector<double> values_;
  bool prefers_sparse_ = false;
};

// Accumulates a QUBO term by term. Quadratic coefficients refer to the
// product s_i s_j of two distinct spins and are mirrored into Q.
class QuboBuilder {
 public:
  explicit QuboBuilder(std::size_t n_spin);

  std::size_t n_spin() const noexcept { return n_spin_; }
  void AddLinear(std::size_t i, double value);
  // Throws std::invalid_argument for i == j; callers fold s_i^2 = s_i
  // themselves.
  void AddQuadratic(std::size_t i, std::size_t j, double value);
  void AddConstant(double value) { c_ += value; }

  QuboModel Build() const;

 private:
  std::size_t n_spin_;
  std::vector<double> q_;
  std::vector<double> h_;
  double c_ = 0.0;
};

// H(s) including the constant C.
double energy(const QuboModel& model, std::span<const std::uint8_t> s);

// sqrt((1/N) sum_i (h_i^2 + sum_j Q_ij^2)).
double normalization_scale(const QuboModel& model);

// Q/D and h/D with D = normalization_scale(model). Throws std::domain_error
// ("degenerate model") when D == 0.
QuboModel normalize(const QuboModel& model);

// Phi = h + Q x.
std::vector<double> mean_field(const QuboModel& model,
                               std::span<const double> x);

// Phi for `lanes` independent vectors stored spin-major: x[j * lanes + r] is
// spin j of lane r. Every lane is accumulated in ascending column order, so a
// lane's result does not depend on how many other lanes share the call or on
// whether the dense or compressed rows are used.
void mean_field_lanes(const QuboModel& model, std::span<const double> x,
                      std::size_t lanes, std::span<double> phi);

// s_i = 1 if x_i >= 0.5 else 0.
SpinVector round_to_binary(std::span<const double> x);

// Checks the SpinVector invariant, throws std::invalid_argument.
void check_spins(std::span<const std::uint8_t> s, std::size_t n_spin);

}  // namespace amfd

#endif  // AMFD_QUBO_HPP_
