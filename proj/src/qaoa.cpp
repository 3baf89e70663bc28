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

#include "qmp/qaoa.hpp"

#include <cmath>

#include "qmp/error.hpp"
#include "qmp/metrics.hpp"
#include "qmp/pipeline.hpp"

namespace qmp {

void QaoaParams::validate() const {
  if (p < 1) throw ValidationError("p", "layer count must be >= 1");
  if (gammas.size() != static_cast<std::size_t>(p) || betas.size() != static_cast<std::size_t>(p)) {
    throw ValidationError("params", "expected " + std::to_string(p) + " gammas and betas, got " +
                                        std::to_string(gammas.size()) + " and " + std::to_string(betas.size()));
  }
}

double cut_value(const Graph& graph, const std::string& bits) {
  if (static_cast<int>(bits.size()) != graph.n_nodes()) {
    throw ValidationError("bits", "outcome '" + bits + "' has length " + std::to_string(bits.size()) + ", graph has " +
                                      std::to_string(graph.n_nodes()) + " nodes");
  }
  double cut = 0.0;
  const auto& edges = graph.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (bits[static_cast<std::size_t>(u)] != bits[static_cast<std::size_t>(v)]) cut += graph.weights()[e];
  }
  return cut;
}

MaxCutSolution brute_force_maxcut(const Graph& graph) {
  const int n = graph.n_nodes();
  if (n > kMaxBruteForceNodes) {
    throw ValidationError("n_nodes", std::to_string(n) + " nodes exceeds the brute-force limit of " +
                                         std::to_string(kMaxBruteForceNodes));
  }
  MaxCutSolution best;
  best.value = -1.0;
  std::string bits(static_cast<std::size_t>(n), '0');
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = ((a >> i) & 1u) ? '1' : '0';
    const double cut = cut_value(graph, bits);
    if (cut > best.value + 1e-12) {
      best.value = cut;
      best.optimal.clear();
    }
    if (std::abs(cut - best.value) <= 1e-12) best.optimal.insert(bits);
  }
  return best;
}

Graph rectangle_graph() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

QuantumCircuit build_qaoa_ansatz(const Graph& graph, const QaoaParams& params) {
  params.validate();
  const int n = graph.n_nodes();
  QuantumCircuit c;
  c.name = "qaoa_p" + std::to_string(params.p);
  c.n_qubits = n;
  c.n_cbits = n;
  for (int q = 0; q < n; ++q) c.add(Gate::h(q));
  for (int k = 0; k < params.p; ++k) {
    const auto& edges = graph.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      c.add(Gate::zz(edges[e].first, edges[e].second, params.gammas[static_cast<std::size_t>(k)] * graph.weights()[e]));
    }
    for (int q = 0; q < n; ++q) c.add(Gate::rx(q, 2.0 * params.betas[static_cast<std::size_t>(k)]));
  }
  for (int q = 0; q < n; ++q) c.add(Gate::measure(q, q));
  return c;
}

double maxcut_expectation(const Distribution& dist, const Graph& graph) {
  if (dist.n_bits != graph.n_nodes()) {
    throw ValidationError("bits", "distribution has " + std::to_string(dist.n_bits) + " bits, graph has " +
                                      std::to_string(graph.n_nodes()) + " nodes");
  }
  double e = 0.0;
  for (const auto& [bits, p] : dist.probabilities) e += p * cut_value(graph, bits);
  return e;
}

double maxcut_expectation(const OutcomeHistogram& hist, const Graph& graph) {
  if (hist.n_bits != graph.n_nodes()) {
    throw ValidationError("bits", "histogram has " + std::to_string(hist.n_bits) + " bits, graph has " +
                                      std::to_string(graph.n_nodes()) + " nodes");
  }
  if (hist.shots == 0) throw ValidationError("shots", "histogram has no shots");
  double e = 0.0;
  for (const auto& [bits, count] : hist.counts) e += static_cast<double>(count) * cut_value(graph, bits);
  return e / static_cast<double>(hist.shots);
}

double ideal_expectation(const Graph& graph, const QaoaParams& params) {
  return maxcut_expectation(ideal_distribution(build_qaoa_ansatz(graph, params)), graph);
}

QaoaParams default_initial_params(int p) {
  if (p < 1) throw ValidationError("p", "layer count must be >= 1");
  return {p, std::vector<double>(static_cast<std::size_t>(p), 0.4), std::vector<double>(static_cast<std::size_t>(p), 0.4)};
}

OptimizedQaoa optimize_parameters(const Graph& graph, int p, const QaoaEvaluator& evaluator, const CobylaConfig& config,
                                  const std::optional<QaoaParams>& initial) {
  (void)graph;
  if (p < 1) throw ValidationError("p", "layer count must be >= 1");
  if (config.max_evals < 2 * p + 1) {
    throw ValidationError("max_evals", "at least 2p + 1 = " + std::to_string(2 * p + 1) + " evaluations are required");
  }
  const QaoaParams start = initial ? *initial : default_initial_params(p);
  start.validate();
  if (start.p != p) throw ValidationError("params", "initial point has p = " + std::to_string(start.p));

  const auto unpack = [p](std::span<const double> x) {
    QaoaParams q{p, std::vector<double>(x.begin(), x.begin() + p), std::vector<double>(x.begin() + p, x.end())};
    return q;
  };
  std::vector<double> x0 = start.gammas;
  x0.insert(x0.end(), start.betas.begin(), start.betas.end());
  const CobylaResult r = cobyla_maximize([&](std::span<const double> x) { return evaluator(unpack(x)); },
                                         std::move(x0), config);
  return {unpack(r.x), r.value, r.evaluations};
}

namespace {

QaoaRun make_run(const OutcomeHistogram& counts, std::vector<int> embedding, const std::set<std::string>& optimal) {
  QaoaRun run;
  run.embedding = std::move(embedding);
  run.counts = counts;
  run.success_mass = compute_pst(counts, optimal);
  run.modal = modal_outcome(counts);
  return run;
}

}  // namespace

ParallelQaoaReport run_parallel_qaoa(const DeviceModel& device, const NoiseModel& noise, const Graph& graph,
                                     const ParallelQaoaOptions& options) {
  if (options.copies < 1) throw ValidationError("copies", "must be >= 1");
  if (options.shots == 0) throw ValidationError("shots", "must be >= 1");
  if (static_cast<long>(options.copies) * graph.n_nodes() > device.n_qubits) {
    throw AllocationError(std::to_string(options.copies) + " copies of a " + std::to_string(graph.n_nodes()) +
                          "-node ansatz need more than the " + std::to_string(device.n_qubits) + " qubits of " +
                          device.name);
  }

  ParallelQaoaReport report;
  report.provenance = {device,        noise,         graph, options.copies, options.shots, options.seed,
                       options.p,     options.optimizer,
                       "merged: mix_seed(seed, 0); standalone: mix_seed(seed, 1)"};

  const MaxCutSolution solution = brute_force_maxcut(graph);
  report.maxcut_value = solution.value;
  report.optimal.assign(solution.optimal.begin(), solution.optimal.end());

  const OptimizedQaoa opt = optimize_parameters(
      graph, options.p, [&](const QaoaParams& q) { return ideal_expectation(graph, q); }, options.optimizer);
  report.params = opt.params;
  report.ideal_expectation = opt.expectation;
  report.optimizer_evaluations = opt.evaluations;

  QuantumCircuit ansatz = build_qaoa_ansatz(graph, opt.params);
  ansatz.name = "qaoa";
  const std::vector<QuantumCircuit> programs(static_cast<std::size_t>(options.copies), ansatz);

  const CompiledJob merged = compile_job(device, programs, options.weights);
  const CompiledJob solo = compile_job(device, std::span(&ansatz, 1), options.weights);

  const OutcomeHistogram joint =
      sample_counts(merged.circuit, noise, options.shots, mix_seed(options.seed, 0), &merged.schedule);
  const auto parts = split_merged_histogram(joint, merged.cbit_ranges);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    report.copies.push_back(make_run(parts[i], merged.allocation.programs[i].embedding, solution.optimal));
  }
  const OutcomeHistogram alone =
      sample_counts(solo.circuit, noise, options.shots, mix_seed(options.seed, 1), &solo.schedule);
  report.standalone = make_run(alone, solo.allocation.programs.front().embedding, solution.optimal);

  report.merged_duration = merged.schedule.duration;
  report.standalone_duration = solo.schedule.duration;
  report.merged_cost = cost_from_counts(device.cost, merged.counts, options.shots);
  report.standalone_cost = cost_from_counts(device.cost, solo.counts, options.shots);
  const double n = static_cast<double>(options.copies);
  report.cost = {n * report.standalone_cost, report.merged_cost, 1.0 - report.merged_cost / (n * report.standalone_cost)};
  const double independent_time = n * static_cast<double>(report.standalone_duration);
  report.runtime = {independent_time, static_cast<double>(report.merged_duration),
                    independent_time > 0.0 ? 1.0 - static_cast<double>(report.merged_duration) / independent_time : 0.0};
  return report;
}

}  // namespace qmp
