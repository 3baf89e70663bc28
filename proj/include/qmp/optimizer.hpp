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

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qmp {

struct CobylaConfig {
  int max_evals = 200;
  double rho_begin = 0.5;  // initial simplex edge / trust radius
  double rho_end = 1e-6;   // final trust radius
};

struct CobylaResult {
  std::vector<double> x;  // best point ever evaluated
  double value = 0.0;
  int evaluations = 0;
};

/// Derivative-free maximization by linear approximation on a simplex of n+1
/// interpolation points with a shrinking trust region (Powell's COBYLA
/// iteration without constraints). Each iteration either takes a step of
/// length rho along the model gradient or, when the simplex has degenerated,
/// a geometry-restoring step; rho halves whenever a step fails to achieve a
/// tenth of the predicted gain on an acceptable simplex.
///
/// The returned point is the best of all evaluated points, so it is never
/// worse than `x0`. Throws ValidationError when max_evals < n + 1.
CobylaResult cobyla_maximize(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> x0, const CobylaConfig& config);

}  // namespace qmp
