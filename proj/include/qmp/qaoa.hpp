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

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmp/circuit.hpp"
#include "qmp/device.hpp"
#include "qmp/graph.hpp"
#include "qmp/optimizer.hpp"
#include "qmp/schedule.hpp"
#include "qmp/simulator.hpp"
#include "qmp/suite.hpp"

namespace qmp {

struct QaoaParams {
  int p = 1;
  std::vector<double> gammas;
  std::vector<double> betas;

  void validate() const;  // p >= 1, both lists of length p
  friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

inline constexpr int kMaxBruteForceNodes = 20;

struct MaxCutSolution {
  double value = 0.0;
  std::set<std::string> optimal;  // node 0 leftmost
};

/// Weight of edges whose endpoints differ in `bits`.
double cut_value(const Graph& graph, const std::string& bits);

/// Exhaustive scan over all 2^n assignments.
MaxCutSolution brute_force_maxcut(const Graph& graph);

/// The 4-cycle 0-1-2-3-0.
Graph rectangle_graph();

/// H on every qubit, then per layer k a ZZ(gamma_k * w) on each edge
/// followed by Rx(2 beta_k) on each qubit; qubit i measured into bit i.
/// With ZZ(t) = exp(-i t/2 Z(x)Z) and Rx(t) = exp(-i t/2 X), layer k applies
/// exp(-i gamma_k/2 sum w ZZ) exp(-i beta_k sum X).
QuantumCircuit build_qaoa_ansatz(const Graph& graph, const QaoaParams& params);

/// Expected cut value under a distribution or the empirical frequencies of a
/// histogram.
double maxcut_expectation(const Distribution& dist, const Graph& graph);
double maxcut_expectation(const OutcomeHistogram& hist, const Graph& graph);

/// Exact expectation of the noiseless ansatz.
double ideal_expectation(const Graph& graph, const QaoaParams& params);

using QaoaEvaluator = std::function<double(const QaoaParams&)>;

struct OptimizedQaoa {
  QaoaParams params;
  double expectation = 0.0;
  int evaluations = 0;
};

/// Starting point used when none is supplied: gamma_k = beta_k = 0.4.
QaoaParams default_initial_params(int p);

/// Maximizes `evaluator` over the 2p angles (x = gammas then betas) with
/// cobyla_maximize. Throws ValidationError when max_evals < 2p + 1.
OptimizedQaoa optimize_parameters(const Graph& graph, int p, const QaoaEvaluator& evaluator,
                                  const CobylaConfig& config = {},
                                  const std::optional<QaoaParams>& initial = std::nullopt);

inline constexpr double kPublishedQaoaBudgetReduction = 0.30;

struct ParallelQaoaOptions {
  int copies = 2;
  std::uint64_t shots = 100;
  std::uint64_t seed = 1;
  int p = 1;
  CobylaConfig optimizer;
  ScheduleWeights weights;
};

struct QaoaRun {
  std::vector<int> embedding;
  OutcomeHistogram counts;
  double success_mass = 0.0;  // frequency of the brute-force optimal set
  std::string modal;

  friend bool operator==(const QaoaRun&, const QaoaRun&) = default;
};

struct ParallelQaoaProvenance {
  DeviceModel device;
  NoiseModel noise;
  Graph graph;
  int copies = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  int p = 1;
  CobylaConfig optimizer;
  std::string seed_derivation;

  friend bool operator==(const ParallelQaoaProvenance& a, const ParallelQaoaProvenance& b) {
    return a.device == b.device && a.noise == b.noise && a.graph == b.graph && a.copies == b.copies &&
           a.shots == b.shots && a.seed == b.seed && a.p == b.p && a.optimizer.max_evals == b.optimizer.max_evals &&
           a.optimizer.rho_begin == b.optimizer.rho_begin && a.optimizer.rho_end == b.optimizer.rho_end &&
           a.seed_derivation == b.seed_derivation;
  }
};

struct ParallelQaoaReport {
  ParallelQaoaProvenance provenance;
  QaoaParams params;
  double ideal_expectation = 0.0;
  int optimizer_evaluations = 0;
  double maxcut_value = 0.0;
  std::vector<std::string> optimal;
  std::vector<QaoaRun> copies;
  QaoaRun standalone;
  std::size_t merged_duration = 0;
  std::size_t standalone_duration = 0;
  double merged_cost = 0.0;
  double standalone_cost = 0.0;
  SavingsSummary cost;     // independent = copies x standalone
  SavingsSummary runtime;
  double published_budget_reduction = kPublishedQaoaBudgetReduction;

  friend bool operator==(const ParallelQaoaReport&, const ParallelQaoaReport&) = default;
};

/// Optimizes once on the ideal evaluator, then runs `copies` identical
/// ansatz circuits as one merged job plus one standalone reference job.
/// Merged sampling uses mix_seed(seed, 0), the reference mix_seed(seed, 1).
/// Throws AllocationError when copies * n_nodes exceeds the device.
ParallelQaoaReport run_parallel_qaoa(const DeviceModel& device, const NoiseModel& noise, const Graph& graph,
                                     const ParallelQaoaOptions& options);

}  // namespace qmp
