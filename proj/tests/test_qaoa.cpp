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

#include "oracle.hpp"
#include "qmp/error.hpp"
#include "qmp/qaoa.hpp"

using namespace qmp;

namespace {

// Expected cut from the dense oracle's outcome distribution.
double oracle_expectation(const Graph& g, const QaoaParams& params) {
  double e = 0.0;
  for (const auto& [bits, p] : oracle::distribution(build_qaoa_ansatz(g, params))) {
    for (std::size_t k = 0; k < g.n_edges(); ++k) {
      const auto [u, v] = g.edges()[k];
      if (bits[static_cast<std::size_t>(u)] != bits[static_cast<std::size_t>(v)]) e += p * g.weights()[k];
    }
  }
  return e;
}

QaoaParams p1(double gamma, double beta) { return {1, {gamma}, {beta}}; }

}  // namespace

TEST(MaxCut, CutValues) {
  const Graph g = rectangle_graph();
  EXPECT_EQ(g.n_edges(), 4u);
  EXPECT_DOUBLE_EQ(cut_value(g, "0101"), 4.0);
  EXPECT_DOUBLE_EQ(cut_value(g, "0011"), 2.0);
  EXPECT_DOUBLE_EQ(cut_value(g, "0000"), 0.0);
  EXPECT_THROW(cut_value(g, "010"), ValidationError);
}

TEST(MaxCut, RectangleOptimum) {
  const MaxCutSolution s = brute_force_maxcut(rectangle_graph());
  EXPECT_DOUBLE_EQ(s.value, 4.0);
  EXPECT_EQ(s.optimal, (std::set<std::string>{"0101", "1010"}));
}

TEST(MaxCut, WeightedTriangleAndSingleEdge) {
  Graph t(3);
  t.add_edge(0, 1, 1.0);
  t.add_edge(1, 2, 2.0);
  t.add_edge(0, 2, 3.0);
  const MaxCutSolution s = brute_force_maxcut(t);
  EXPECT_DOUBLE_EQ(s.value, 5.0);
  EXPECT_EQ(s.optimal, (std::set<std::string>{"001", "110"}));
  Graph e(2);
  e.add_edge(0, 1);
  EXPECT_EQ(brute_force_maxcut(e).optimal, (std::set<std::string>{"01", "10"}));
}

TEST(MaxCut, NodeCap) { EXPECT_THROW(brute_force_maxcut(Graph(21)), ValidationError); }

TEST(Ansatz, Structure) {
  const QuantumCircuit c = build_qaoa_ansatz(rectangle_graph(), p1(0.3, 0.2));
  EXPECT_EQ(c.name, "qaoa_p1");
  EXPECT_EQ(c.n_qubits, 4);
  EXPECT_EQ(c.n_cbits, 4);
  std::map<GateKind, int> kinds;
  for (const auto& g : c.gates) ++kinds[g.kind];
  EXPECT_EQ(kinds[GateKind::H], 4);
  EXPECT_EQ(kinds[GateKind::ZZ], 4);
  EXPECT_EQ(kinds[GateKind::Rx], 4);
  EXPECT_EQ(kinds[GateKind::Measure], 4);
  EXPECT_EQ(build_qaoa_ansatz(rectangle_graph(), {2, {0.1, 0.2}, {0.3, 0.4}}).gates.size(), 24u);
}

TEST(Ansatz, ParamValidation) {
  EXPECT_THROW(build_qaoa_ansatz(rectangle_graph(), {1, {0.1, 0.2}, {0.3}}), ValidationError);
  EXPECT_THROW(build_qaoa_ansatz(rectangle_graph(), {0, {}, {}}), ValidationError);
}

TEST(Expectation, MatchesDenseOracleAndClosedForm) {
  const Graph g = rectangle_graph();
  for (double gamma : {-1.1, 0.0, 0.4, 0.785, 2.0}) {
    for (double beta : {-0.7, 0.1, 0.4, 1.3}) {
      const double e = ideal_expectation(g, p1(gamma, beta));
      EXPECT_NEAR(e, oracle_expectation(g, p1(gamma, beta)), 1e-12);
      // Ring of four at depth one.
      EXPECT_NEAR(e, 2.0 - std::sin(4.0 * beta) * std::sin(2.0 * gamma), 1e-12);
    }
  }
}

TEST(Expectation, WeightedAndDepthTwoAgreeWithOracle) {
  Graph g(4);
  g.add_edge(0, 1, 0.5);
  g.add_edge(1, 2, 2.0);
  g.add_edge(2, 3, 1.0);
  g.add_edge(0, 2, 1.5);
  const QaoaParams params{2, {0.3, -0.8}, {0.6, 0.2}};
  EXPECT_NEAR(ideal_expectation(g, params), oracle_expectation(g, params), 1e-12);
}

TEST(Expectation, HistogramFrequencies) {
  OutcomeHistogram h;
  h.n_bits = 4;
  h.counts = {{"0101", 30}, {"0011", 50}, {"0000", 20}};
  h.shots = 100;
  EXPECT_DOUBLE_EQ(maxcut_expectation(h, rectangle_graph()), 0.3 * 4.0 + 0.5 * 2.0);
  OutcomeHistogram bad;
  bad.n_bits = 3;
  bad.counts = {{"010", 1}};
  bad.shots = 1;
  EXPECT_THROW(maxcut_expectation(bad, rectangle_graph()), ValidationError);
}

TEST(Optimize, ReachesTheDepthOneOptimum) {
  const Graph g = rectangle_graph();
  const auto evaluator = [&](const QaoaParams& p) { return ideal_expectation(g, p); };
  const OptimizedQaoa r = optimize_parameters(g, 1, evaluator);
  EXPECT_NEAR(r.expectation, 3.0, 1e-3);
  EXPECT_NEAR(ideal_expectation(g, r.params), r.expectation, 1e-12);
  EXPECT_LE(r.evaluations, CobylaConfig{}.max_evals);
  EXPECT_EQ(default_initial_params(1), p1(0.4, 0.4));
}

TEST(Optimize, DepthTwoIsAtLeastDepthOne) {
  const Graph g = rectangle_graph();
  const auto evaluator = [&](const QaoaParams& p) { return ideal_expectation(g, p); };
  EXPECT_GE(optimize_parameters(g, 2, evaluator).expectation, 3.0 - 1e-3);
}

TEST(Optimize, BudgetTooSmall) {
  const Graph g = rectangle_graph();
  const auto evaluator = [&](const QaoaParams& p) { return ideal_expectation(g, p); };
  EXPECT_THROW(optimize_parameters(g, 1, evaluator, {2, 0.5, 1e-6}), ValidationError);
  EXPECT_THROW(optimize_parameters(g, 2, evaluator, {4, 0.5, 1e-6}), ValidationError);
}

TEST(ParallelQaoa, TwoCopiesOnTrappedIon) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  ParallelQaoaOptions o;
  o.seed = 3;
  const ParallelQaoaReport r = run_parallel_qaoa(d, derive_noise_model(d), rectangle_graph(), o);
  ASSERT_EQ(r.copies.size(), 2u);
  EXPECT_DOUBLE_EQ(r.maxcut_value, 4.0);
  EXPECT_EQ(r.optimal, (std::vector<std::string>{"0101", "1010"}));
  std::set<int> used;
  for (const auto& run : r.copies) {
    EXPECT_EQ(run.counts.shots, 100u);
    EXPECT_DOUBLE_EQ(run.success_mass, static_cast<double>(run.counts.count("0101") + run.counts.count("1010")) / 100.0);
    used.insert(run.embedding.begin(), run.embedding.end());
  }
  EXPECT_EQ(used.size(), 8u);
  EXPECT_NEAR(r.ideal_expectation, 3.0, 1e-3);
  EXPECT_DOUBLE_EQ(r.cost.independent, 2.0 * r.standalone_cost);
  EXPECT_DOUBLE_EQ(r.cost.merged, r.merged_cost);
  EXPECT_DOUBLE_EQ(r.cost.savings, 1.0 - r.merged_cost / (2.0 * r.standalone_cost));
  EXPECT_DOUBLE_EQ(r.runtime.savings, 1.0 - static_cast<double>(r.merged_duration) / (2.0 * r.standalone_duration));
  EXPECT_LE(r.merged_duration, 2 * r.standalone_duration);
  EXPECT_EQ(run_parallel_qaoa(d, derive_noise_model(d), rectangle_graph(), o), r);
}

TEST(ParallelQaoa, TooManyCopies) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  ParallelQaoaOptions o;
  o.copies = 4;
  EXPECT_THROW(run_parallel_qaoa(d, derive_noise_model(d), rectangle_graph(), o), AllocationError);
}
