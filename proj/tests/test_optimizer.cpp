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

#include <gtest/gtest.h>

#include <cmath>

#include "qmp/error.hpp"
#include "qmp/optimizer.hpp"

using namespace qmp;

TEST(Cobyla, FindsQuadraticPeak) {
  int calls = 0;
  const auto f = [&](std::span<const double> x) {
    ++calls;
    return -(x[0] - 1.0) * (x[0] - 1.0) - 2.0 * (x[1] + 2.0) * (x[1] + 2.0);
  };
  const CobylaResult r = cobyla_maximize(f, {0.0, 0.0}, {500, 0.5, 1e-7});
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], -2.0, 1e-4);
  EXPECT_NEAR(r.value, 0.0, 1e-7);
  EXPECT_EQ(r.evaluations, calls);
  EXPECT_LE(r.evaluations, 500);
}

TEST(Cobyla, FindsPeakOfPeriodicFunctionIn3d) {
  const auto f = [](std::span<const double> x) { return std::cos(x[0]) + std::cos(x[1] - 0.5) + std::cos(x[2] + 0.25); };
  const CobylaResult r = cobyla_maximize(f, {0.3, 0.2, 0.1}, {400, 0.5, 1e-8});
  EXPECT_NEAR(r.value, 3.0, 1e-8);
  EXPECT_NEAR(r.x[1], 0.5, 1e-3);
}

TEST(Cobyla, NeverWorseThanStartAndRespectsBudget) {
  const auto f = [](std::span<const double> x) { return std::sin(3.0 * x[0]) * std::cos(2.0 * x[1]) - 0.1 * x[0] * x[0]; };
  for (int budget : {3, 5, 10, 40}) {
    const CobylaResult r = cobyla_maximize(f, {0.2, -0.3}, {budget, 0.5, 1e-6});
    const std::vector<double> x0{0.2, -0.3};
    EXPECT_GE(r.value, f(x0));
    EXPECT_LE(r.evaluations, budget);
    EXPECT_DOUBLE_EQ(f(r.x), r.value);
  }
}

TEST(Cobyla, ConstantFunctionTerminates) {
  const CobylaResult r = cobyla_maximize([](std::span<const double>) { return 1.0; }, {0.0, 0.0}, {1000, 0.5, 1e-3});
  EXPECT_LT(r.evaluations, 1000);
  EXPECT_EQ(r.x, (std::vector<double>{0.0, 0.0}));
}

TEST(Cobyla, ZeroDimensional) {
  const CobylaResult r = cobyla_maximize([](std::span<const double>) { return 2.5; }, {}, {});
  EXPECT_EQ(r.evaluations, 1);
  EXPECT_DOUBLE_EQ(r.value, 2.5);
}

TEST(Cobyla, Deterministic) {
  const auto f = [](std::span<const double> x) { return -std::abs(x[0] - 0.7) - x[1] * x[1]; };
  const CobylaResult a = cobyla_maximize(f, {0.0, 1.0}, {});
  const CobylaResult b = cobyla_maximize(f, {0.0, 1.0}, {});
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Cobyla, ConfigValidation) {
  const auto f = [](std::span<const double>) { return 0.0; };
  try {
    cobyla_maximize(f, {0.0, 0.0}, {2, 0.5, 1e-6});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "max_evals");
  }
  EXPECT_THROW(cobyla_maximize(f, {0.0}, {10, 0.0, 1e-6}), ValidationError);
  EXPECT_THROW(cobyla_maximize(f, {0.0}, {10, 0.1, 0.2}), ValidationError);
}
