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

#include "qmp/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qmp/error.hpp"
#include "qmp/rebase.hpp"
#include "qmp/routing.hpp"

namespace qmp {
namespace {

constexpr int kMaxPermutedQubits = 7;

// ESU extension step: every connected k-subset is emitted exactly once, rooted
// at its smallest vertex `root`.
void extend_subset(const Graph& g, const std::vector<bool>& avail, int k, int root, std::vector<int>& sub,
                   std::vector<int> ext, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(sub.size()) == k) {
    std::vector<int> sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  while (!ext.empty()) {
    const int w = ext.back();
    ext.pop_back();
    std::vector<int> next_ext = ext;
    for (int u : g.neighbors(w)) {
      if (u <= root || !avail[static_cast<std::size_t>(u)]) continue;
      const bool touches_sub = std::any_of(sub.begin(), sub.end(), [&](int s) { return s == u || g.has_edge(s, u); });
      if (!touches_sub) next_ext.push_back(u);
    }
    sub.push_back(w);
    extend_subset(g, avail, k, root, sub, std::move(next_ext), out);
    sub.pop_back();
  }
}

double score_from(const DeviceModel& device, const GateCounts& counts, std::size_t swaps) {
  return std::pow(1.0 - device.err_1q, static_cast<double>(counts.one_qubit)) *
         std::pow(1.0 - device.err_2q, static_cast<double>(counts.two_qubit + 3 * swaps)) *
         std::pow(1.0 - device.err_ro, static_cast<double>(counts.measure));
}

}  // namespace

std::vector<std::vector<int>> enumerate_connected_subsets(const Graph& graph, int size,
                                                          const std::vector<bool>& available) {
  std::vector<std::vector<int>> out;
  if (size <= 0) return out;
  std::vector<bool> avail = available.empty() ? std::vector<bool>(static_cast<std::size_t>(graph.n_nodes()), true)
                                              : available;
  for (int v = 0; v < graph.n_nodes(); ++v) {
    if (!avail[static_cast<std::size_t>(v)]) continue;
    std::vector<int> ext;
    for (int u : graph.neighbors(v)) {
      if (u > v && avail[static_cast<std::size_t>(u)]) ext.push_back(u);
    }
    std::vector<int> sub{v};
    extend_subset(graph, avail, size, v, sub, std::move(ext), out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PartitionChoice evaluate_partition(const DeviceModel& device, std::span<const int> subset,
                                   const QuantumCircuit& rebased) {
  if (static_cast<int>(subset.size()) != rebased.n_qubits) {
    throw ValidationError("subset", "size " + std::to_string(subset.size()) + " does not match " +
                                        std::to_string(rebased.n_qubits) + " program qubits");
  }
  if (!subset.empty() && !device.coupling.is_connected_subset(subset)) {
    throw ValidationError("subset", "disconnected subset");
  }
  PartitionChoice best;
  best.subset.assign(subset.begin(), subset.end());
  std::sort(best.subset.begin(), best.subset.end());
  std::vector<int> perm = best.subset;
  bool first = true;
  do {
    const std::size_t swaps = route_to_partition(rebased, perm, device).swaps;
    if (first || swaps < best.swaps) {
      best.swaps = swaps;
      best.embedding = perm;
      first = false;
    }
    if (best.swaps == 0 || rebased.n_qubits > kMaxPermutedQubits) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.score = score_from(device, count_gates(rebased), best.swaps);
  return best;
}

double score_partition(const DeviceModel& device, std::span<const int> subset, const QuantumCircuit& circuit) {
  return evaluate_partition(device, subset, rebase_to_basis(circuit, device.basis)).score;
}

std::vector<PartitionChoice> score_candidates(const DeviceModel& device,
                                              const std::vector<std::vector<int>>& candidates,
                                              const QuantumCircuit& rebased) {
  std::vector<PartitionChoice> out(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size()); ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_partition(device, candidates[static_cast<std::size_t>(i)], rebased);
  }
  return out;
}

std::vector<PartitionChoice> score_candidates_serial(const DeviceModel& device,
                                                     const std::vector<std::vector<int>>& candidates,
                                                     const QuantumCircuit& rebased) {
  std::vector<PartitionChoice> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back(evaluate_partition(device, c, rebased));
  return out;
}

Allocation allocate_partitions(const DeviceModel& device, std::span<const QuantumCircuit> circuits) {
  Allocation alloc;
  alloc.device = device.name;
  alloc.programs.resize(circuits.size());

  int needed = 0;
  for (const auto& c : circuits) needed += c.n_qubits;
  if (needed > device.n_qubits) {
    throw AllocationError("insufficient qubits: programs need " + std::to_string(needed) + ", device " +
                          device.name + " has " + std::to_string(device.n_qubits));
  }

  std::vector<std::size_t> order(circuits.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> cx(circuits.size());
  for (std::size_t i = 0; i < circuits.size(); ++i) cx[i] = circuit_stats(circuits[i]).cx_count;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cx[a] > cx[b]; });

  std::vector<bool> free(static_cast<std::size_t>(device.n_qubits), true);
  for (std::size_t idx : order) {
    const QuantumCircuit& circuit = circuits[idx];
    ProgramPlacement& placement = alloc.programs[idx];
    placement.circuit_id = circuit.name.empty() ? "program" + std::to_string(idx) : circuit.name;
    if (circuit.n_qubits == 0) {
      placement.score = 1.0;
      continue;
    }
    const auto candidates = enumerate_connected_subsets(device.coupling, circuit.n_qubits, free);
    if (candidates.empty()) {
      throw AllocationError("no connected subset of " + std::to_string(circuit.n_qubits) +
                            " free qubits for program '" + placement.circuit_id + "'");
    }
    const QuantumCircuit rebased = rebase_to_basis(circuit, device.basis);
    const auto scored = score_candidates(device, candidates, rebased);
    std::size_t best = 0;
    for (std::size_t i = 1; i < scored.size(); ++i) {
      if (scored[i].score > scored[best].score) best = i;
    }
    placement.embedding = scored[best].embedding;
    placement.swaps = scored[best].swaps;
    placement.score = scored[best].score;
    for (int p : placement.embedding) free[static_cast<std::size_t>(p)] = false;
  }
  return alloc;
}

void check_allocation(const DeviceModel& device, const Allocation& allocation,
                      std::span<const QuantumCircuit> circuits) {
  if (allocation.programs.size() != circuits.size()) throw ValidationError("allocation", "program count mismatch");
  std::vector<bool> used(static_cast<std::size_t>(device.n_qubits), false);
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    const auto& emb = allocation.programs[i].embedding;
    const std::string where = "allocation.programs[" + std::to_string(i) + "]";
    if (static_cast<int>(emb.size()) != circuits[i].n_qubits) throw ValidationError(where, "embedding size mismatch");
    for (int p : emb) {
      if (p < 0 || p >= device.n_qubits) throw ValidationError(where, "physical qubit out of range");
      if (used[static_cast<std::size_t>(p)]) throw ValidationError(where, "physical qubit " + std::to_string(p) + " shared");
      used[static_cast<std::size_t>(p)] = true;
    }
    if (!emb.empty() && !device.coupling.is_connected_subset(emb)) throw ValidationError(where, "embedding not connected");
    const double s = allocation.programs[i].score;
    if (!(s > 0.0 && s <= 1.0)) throw ValidationError(where, "score outside (0, 1]");
  }
}

}  // namespace qmp
