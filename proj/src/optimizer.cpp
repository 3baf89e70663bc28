// Copyright 2026 The qmprog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmp/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qmp/error.hpp"

namespace qmp {
namespace {

// Simplex acceptability and step constants from Powell's COBYLA.
constexpr double kAlpha = 0.25;  // min distance of a vertex to its opposite face, in units of rho
constexpr double kBeta = 2.1;    // max edge length, in units of rho
constexpr double kGamma = 0.5;   // geometry step length, in units of rho
constexpr double kDelta = 1.1;

using Matrix = std::vector<std::vector<double>>;

// Inverse of the n x n matrix whose columns are `cols`; nullopt if singular.
std::optional<Matrix> invert_columns(const Matrix& cols) {
  const std::size_t n = cols.size();
  Matrix a(n, std::vector<double>(2 * n, 0.0));
  double scale = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      a[r][c] = cols[c][r];
      scale = std::max(scale, std::abs(a[r][c]));
    }
    a[r][n + r] = 1.0;
  }
  if (scale == 0.0) return std::nullopt;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
    }
    if (std::abs(a[pivot][c]) < 1e-13 * scale) return std::nullopt;
    std::swap(a[c], a[pivot]);
    const double inv = 1.0 / a[c][c];
    for (double& v : a[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0.0) continue;
      const double f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Matrix inv(n, std::vector<double>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
  }
  return inv;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

class Cobyla {
 public:
  Cobyla(const std::function<double(std::span<const double>)>& f, std::vector<double> x0, const CobylaConfig& cfg)
      : f_(f), cfg_(cfg), n_(x0.size()), base_(std::move(x0)) {}

  CobylaResult run() {
    rho_ = cfg_.rho_begin;
    if (n_ == 0) {
      evaluate(base_);
      return result();
    }
    base_value_ = evaluate(base_);
    build_simplex();
    bool last_was_geometry = false;
    while (!budget_exhausted()) {
      make_best_vertex_the_base();
      auto inv = invert_columns(offsets_);
      if (!inv) {
        build_simplex();
        continue;
      }
      const std::vector<double> grad = model_gradient(*inv);
      const auto [acceptable, geometry_vertex] = check_geometry(*inv);
      if (!acceptable && !last_was_geometry) {
        geometry_step(*inv, grad, geometry_vertex);
        last_was_geometry = true;
        continue;
      }
      last_was_geometry = false;

      const double gnorm = norm(grad);
      if (gnorm <= 1e-300) {
        if (!shrink()) break;
        continue;
      }
      std::vector<double> step(n_);
      for (std::size_t i = 0; i < n_; ++i) step[i] = -rho_ * grad[i] / gnorm;
      const double predicted = rho_ * gnorm;
      std::vector<double> trial = base_;
      for (std::size_t i = 0; i < n_; ++i) trial[i] += step[i];
      const double value = evaluate(trial);
      const double ratio = (base_value_ - value) / predicted;
      replace_vertex(*inv, step, value);
      if (ratio <= 0.1 && acceptable) {
        if (!shrink()) break;
      }
    }
    return result();
  }

 private:
  bool budget_exhausted() const { return evals_ >= cfg_.max_evals; }

  // Minimizes -f internally.
  double evaluate(const std::vector<double>& x) {
    const double fx = f_(x);
    ++evals_;
    if (evals_ == 1 || fx > best_value_) {
      best_value_ = fx;
      best_x_ = x;
    }
    return -fx;
  }

  CobylaResult result() const { return {best_x_, best_value_, evals_}; }

  void build_simplex() {
    offsets_.assign(n_, std::vector<double>(n_, 0.0));
    values_.assign(n_, 0.0);
    for (std::size_t j = 0; j < n_ && !budget_exhausted(); ++j) {
      offsets_[j][j] = rho_;
      std::vector<double> x = base_;
      x[j] += rho_;
      values_[j] = evaluate(x);
    }
  }

  void make_best_vertex_the_base() {
    std::size_t best = n_;
    double best_value = base_value_;
    for (std::size_t j = 0; j < n_; ++j) {
      if (values_[j] < best_value) {
        best_value = values_[j];
        best = j;
      }
    }
    if (best == n_) return;
    const std::vector<double> shift = offsets_[best];
    for (std::size_t i = 0; i < n_; ++i) base_[i] += shift[i];
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == best) continue;
      for (std::size_t i = 0; i < n_; ++i) offsets_[j][i] -= shift[i];
    }
    for (std::size_t i = 0; i < n_; ++i) offsets_[best][i] = -shift[i];
    std::swap(values_[best], base_value_);
  }

  // Linear model through the simplex: grad . offsets_[j] = values_[j] - base.
  std::vector<double> model_gradient(const Matrix& inv) const {
    std::vector<double> g(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      const double diff = values_[j] - base_value_;
      for (std::size_t i = 0; i < n_; ++i) g[i] += inv[j][i] * diff;
    }
    return g;
  }

  std::pair<bool, std::size_t> check_geometry(const Matrix& inv) const {
    std::size_t longest = 0, flattest = 0;
    double max_eta = -1.0, min_sigma = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n_; ++j) {
      const double eta = norm(offsets_[j]);
      const double sigma = 1.0 / norm(inv[j]);
      if (eta > max_eta) {
        max_eta = eta;
        longest = j;
      }
      if (sigma < min_sigma) {
        min_sigma = sigma;
        flattest = j;
      }
    }
    if (max_eta > kBeta * rho_) return {false, longest};
    if (min_sigma < kAlpha * rho_) return {false, flattest};
    return {true, 0};
  }

  void geometry_step(const Matrix& inv, const std::vector<double>& grad, std::size_t j) {
    const double row_norm = norm(inv[j]);
    std::vector<double> d(n_);
    double slope = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      d[i] = kGamma * rho_ * inv[j][i] / row_norm;
      slope += grad[i] * d[i];
    }
    if (slope > 0.0) {
      for (double& v : d) v = -v;
    }
    std::vector<double> x = base_;
    for (std::size_t i = 0; i < n_; ++i) x[i] += d[i];
    values_[j] = evaluate(x);
    offsets_[j] = std::move(d);
  }

  void replace_vertex(const Matrix& inv, const std::vector<double>& step, double value) {
    const bool improved = value < base_value_;
    const double edge = kDelta * rho_;
    std::size_t drop = n_;
    double best_weight = improved ? 0.0 : 1.0;
    for (std::size_t j = 0; j < n_; ++j) {
      double sigma = 0.0;
      double dist2 = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        sigma += inv[j][i] * step[i];
        const double diff = offsets_[j][i] - step[i];
        dist2 += diff * diff;
      }
      double weight = std::abs(sigma);
      if (dist2 > edge * edge) weight *= dist2 / (edge * edge);
      if (weight > best_weight) {
        best_weight = weight;
        drop = j;
      }
    }
    if (drop == n_) return;
    offsets_[drop] = step;
    values_[drop] = value;
  }

  bool shrink() {
    if (rho_ <= cfg_.rho_end) return false;
    rho_ *= 0.5;
    if (rho_ <= 1.5 * cfg_.rho_end) rho_ = cfg_.rho_end;
    return true;
  }

  const std::function<double(std::span<const double>)>& f_;
  CobylaConfig cfg_;
  std::size_t n_;
  std::vector<double> base_;
  double base_value_ = 0.0;
  Matrix offsets_;               // offsets_[j]: vertex j minus base
  std::vector<double> values_;   // -f at each vertex
  double rho_ = 0.0;
  int evals_ = 0;
  std::vector<double> best_x_;
  double best_value_ = 0.0;
};

}  // namespace

CobylaResult cobyla_maximize(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> x0, const CobylaConfig& config) {
  if (config.max_evals < static_cast<int>(x0.size()) + 1) {
    throw ValidationError("max_evals", "needs at least n + 1 = " + std::to_string(x0.size() + 1) +
                                           " evaluations to build the initial linear model");
  }
  if (!(config.rho_begin > 0.0) || !(config.rho_end > 0.0) || config.rho_end > config.rho_begin) {
    throw ValidationError("rho", "require 0 < rho_end <= rho_begin");
  }
  return Cobyla(objective, std::move(x0), config).run();
}

}  // namespace qmp
