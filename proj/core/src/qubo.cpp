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

#include "amfd/qubo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace amfd {
namespace {

// Below this fill ratio the compressed rows are cheaper to walk.
constexpr double kSparseFillRatio = 0.35;

void CheckDimension(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (got " +
                                std::to_string(got) + ", expected " +
                                std::to_string(want) + ")");
  }
}

template <std::size_t L>
void DenseLanes(const QuboModel& m, const double* x, double* phi) {
  const std::size_t n = m.n_spin();
  const double* q = m.q_dense().data();
  const double* h = m.h().data();
  for (std::size_t i = 0; i < n; ++i) {
    double acc[L];
    for (std::size_t r = 0; r < L; ++r) acc[r] = h[i];
    const double* qi = q + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double qij = qi[j];
      const double* xj = x + j * L;
      for (std::size_t r = 0; r < L; ++r) acc[r] += qij * xj[r];
    }
    for (std::size_t r = 0; r < L; ++r) phi[i * L + r] = acc[r];
  }
}

template <std::size_t L>
void SparseLanes(const QuboModel& m, const double* x, double* phi) {
  const std::size_t n = m.n_spin();
  const double* h = m.h().data();
  for (std::size_t i = 0; i < n; ++i) {
    double acc[L];
    for (std::size_t r = 0; r < L; ++r) acc[r] = h[i];
    const auto cols = m.row_columns(i);
    const auto vals = m.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const double qij = vals[k];
      const double* xj = x + static_cast<std::size_t>(cols[k]) * L;
      for (std::size_t r = 0; r < L; ++r) acc[r] += qij * xj[r];
    }
    for (std::size_t r = 0; r < L; ++r) phi[i * L + r] = acc[r];
  }
}

void GenericLanes(const QuboModel& m, const double* x, std::size_t lanes,
                  double* phi) {
  const std::size_t n = m.n_spin();
  const double* h = m.h().data();
  for (std::size_t i = 0; i < n; ++i) {
    double* acc = phi + i * lanes;
    for (std::size_t r = 0; r < lanes; ++r) acc[r] = h[i];
    const auto cols = m.row_columns(i);
    const auto vals = m.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const double qij = vals[k];
      const double* xj = x + static_cast<std::size_t>(cols[k]) * lanes;
      for (std::size_t r = 0; r < lanes; ++r) acc[r] += qij * xj[r];
    }
  }
}

template <std::size_t L>
void DispatchLanes(const QuboModel& m, const double* x, double* phi) {
  if (m.prefers_sparse()) {
    SparseLanes<L>(m, x, phi);
  } else {
    DenseLanes<L>(m, x, phi);
  }
}

}  // namespace

QuboModel::QuboModel(std::size_t n_spin, std::vector<double> q,
                     std::vector<double> h, double c)
    : n_spin_(n_spin), q_(std::move(q)), h_(std::move(h)), c_(c) {
  if (n_spin_ == 0) throw std::invalid_argument("QuboModel: n_spin must be positive");
  if (n_spin_ > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("QuboModel: n_spin too large");
  }
  CheckDimension(q_.size(), n_spin_ * n_spin_, "QuboModel q");
  CheckDimension(h_.size(), n_spin_, "QuboModel h");
  for (std::size_t i = 0; i < n_spin_; ++i) {
    if (q_[i * n_spin_ + i] != 0.0) {
      throw std::invalid_argument("QuboModel: nonzero diagonal at " +
                                  std::to_string(i));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (q_[i * n_spin_ + j] != q_[j * n_spin_ + i]) {
        throw std::invalid_argument("QuboModel: q is not symmetric at (" +
                                    std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
    }
  }
  for (double v : q_) {
    if (!std::isfinite(v)) throw std::invalid_argument("QuboModel: non-finite q entry");
  }
  for (double v : h_) {
    if (!std::isfinite(v)) throw std::invalid_argument("QuboModel: non-finite h entry");
  }
  BuildRows();
}

QuboModel QuboModel::FromUpperTriangle(std::size_t n_spin,
                                       const std::vector<double>& upper,
                                       std::vector<double> h, double c) {
  CheckDimension(upper.size(), n_spin * n_spin, "FromUpperTriangle");
  std::vector<double> q(n_spin * n_spin, 0.0);
  for (std::size_t i = 0; i < n_spin; ++i) {
    for (std::size_t j = 0; j < n_spin; ++j) {
      const double v = upper[i * n_spin + j];
      if (j <= i) {
        if (v != 0.0) {
          throw std::invalid_argument(
              "FromUpperTriangle: entries on or below the diagonal must be zero");
        }
        continue;
      }
      q[i * n_spin + j] = v;
      q[j * n_spin + i] = v;
    }
  }
  return QuboModel(n_spin, std::move(q), std::move(h), c);
}

void QuboModel::BuildRows() {
  row_start_.assign(n_spin_ + 1, 0);
  columns_.clear();
  values_.clear();
  for (std::size_t i = 0; i < n_spin_; ++i) {
    for (std::size_t j = 0; j < n_spin_; ++j) {
      const double v = q_[i * n_spin_ + j];
      if (v != 0.0) {
        columns_.push_back(static_cast<std::uint32_t>(j));
        values_.push_back(v);
      }
    }
    row_start_[i + 1] = values_.size();
  }
  prefers_sparse_ = static_cast<double>(values_.size()) <
                    kSparseFillRatio * static_cast<double>(q_.size());
}

QuboModel QuboModel::Scaled(double factor) const {
  std::vector<double> q = q_;
  std::vector<double> h = h_;
  for (double& v : q) v *= factor;
  for (double& v : h) v *= factor;
  return QuboModel(n_spin_, std::move(q), std::move(h), c_);
}

QuboBuilder::QuboBuilder(std::size_t n_spin)
    : n_spin_(n_spin), q_(n_spin * n_spin, 0.0), h_(n_spin, 0.0) {
  if (n_spin == 0) throw std::invalid_argument("QuboBuilder: n_spin must be positive");
}

void QuboBuilder::AddLinear(std::size_t i, double value) {
  if (i >= n_spin_) throw std::out_of_range("QuboBuilder::AddLinear: index out of range");
  h_[i] += value;
}

void QuboBuilder::AddQuadratic(std::size_t i, std::size_t j, double value) {
  if (i >= n_spin_ || j >= n_spin_) {
    throw std::out_of_range("QuboBuilder::AddQuadratic: index out of range");
  }
  if (i == j) {
    throw std::invalid_argument("QuboBuilder::AddQuadratic: diagonal term at " +
                                std::to_string(i));
  }
  q_[i * n_spin_ + j] += value;
  q_[j * n_spin_ + i] += value;
}

QuboModel QuboBuilder::Build() const { return QuboModel(n_spin_, q_, h_, c_); }

double energy(const QuboModel& model, std::span<const std::uint8_t> s) {
  check_spins(s, model.n_spin());
  const auto h = model.h();
  double linear = 0.0;
  double quadratic = 0.0;
  for (std::size_t i = 0; i < model.n_spin(); ++i) {
    if (!s[i]) continue;
    linear += h[i];
    const auto cols = model.row_columns(i);
    const auto vals = model.row_values(i);
    for (std::size_t k = 0; k < cols.size() && cols[k] < i; ++k) {
      if (s[cols[k]]) quadratic += vals[k];
    }
  }
  return linear + quadratic + model.c();
}

double normalization_scale(const QuboModel& model) {
  double sum = 0.0;
  for (double v : model.h()) sum += v * v;
  for (double v : model.q_dense()) sum += v * v;
  return std::sqrt(sum / static_cast<double>(model.n_spin()));
}

QuboModel normalize(const QuboModel& model) {
  const double d = normalization_scale(model);
  if (d == 0.0) {
    throw std::domain_error("degenerate model: Q and h are all zero");
  }
  std::vector<double> q(model.q_dense().begin(), model.q_dense().end());
  std::vector<double> h(model.h().begin(), model.h().end());
  for (double& v : q) v /= d;
  for (double& v : h) v /= d;
  return QuboModel(model.n_spin(), std::move(q), std::move(h), model.c());
}

std::vector<double> mean_field(const QuboModel& model,
                               std::span<const double> x) {
  CheckDimension(x.size(), model.n_spin(), "mean_field");
  std::vector<double> phi(model.n_spin());
  mean_field_lanes(model, x, 1, phi);
  return phi;
}

void mean_field_lanes(const QuboModel& model, std::span<const double> x,
                      std::size_t lanes, std::span<double> phi) {
  if (lanes == 0) throw std::invalid_argument("mean_field_lanes: lanes must be positive");
  CheckDimension(x.size(), model.n_spin() * lanes, "mean_field_lanes x");
  CheckDimension(phi.size(), model.n_spin() * lanes, "mean_field_lanes phi");
  switch (lanes) {
    case 1:
      DispatchLanes<1>(model, x.data(), phi.data());
      return;
    case 8:
      DispatchLanes<8>(model, x.data(), phi.data());
      return;
    case 16:
      DispatchLanes<16>(model, x.data(), phi.data());
      return;
    default:
      GenericLanes(model, x.data(), lanes, phi.data());
  }
}

SpinVector round_to_binary(std::span<const double> x) {
  SpinVector s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] >= 0.5 ? 1 : 0;
  return s;
}

void check_spins(std::span<const std::uint8_t> s, std::size_t n_spin) {
  CheckDimension(s.size(), n_spin, "spin vector");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > 1) {
      throw std::invalid_argument("spin vector entry " + std::to_string(i) +
                                  " is not 0 or 1");
    }
  }
}

}  // namespace amfd
