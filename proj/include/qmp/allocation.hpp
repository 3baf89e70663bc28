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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qmp/circuit.hpp"
#include "qmp/device.hpp"

namespace qmp {

/// Best embedding of one circuit into one physical subset.
struct PartitionChoice {
  std::vector<int> subset;     // sorted physical qubits
  std::vector<int> embedding;  // logical -> physical
  std::size_t swaps = 0;
  double score = 0.0;
};

struct ProgramPlacement {
  std::string circuit_id;
  std::vector<int> embedding;
  std::size_t swaps = 0;
  double score = 0.0;

  friend bool operator==(const ProgramPlacement&, const ProgramPlacement&) = default;
};

/// One placement per input program, in input order.
struct Allocation {
  std::string device;
  std::vector<ProgramPlacement> programs;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// All connected induced subgraphs with exactly `size` vertices drawn from
/// `available` (mask over graph nodes; all nodes when empty), each sorted and
/// the list ordered lexicographically.
std::vector<std::vector<int>> enumerate_connected_subsets(const Graph& graph, int size,
                                                          const std::vector<bool>& available = {});

/// Success estimate (1-e1)^N1q (1-e2)^(N2q + 3S) (1-ero)^Nm with counts from
/// the circuit rebased to the device basis and S the SWAPs routing inserts
/// under the best embedding into `subset`.
double score_partition(const DeviceModel& device, std::span<const int> subset, const QuantumCircuit& circuit);

/// Embedding search behind score_partition. `rebased` must already be in the
/// device basis. Up to 7 logical qubits every permutation of the subset is
/// tried and the fewest-SWAP one kept (first in lexicographic order on ties);
/// larger circuits use the sorted subset as the embedding.
PartitionChoice evaluate_partition(const DeviceModel& device, std::span<const int> subset,
                                   const QuantumCircuit& rebased);

/// Scores every candidate subset. OpenMP-parallel over candidates; results are
/// index-aligned with `candidates` and identical to the serial version.
std::vector<PartitionChoice> score_candidates(const DeviceModel& device,
                                              const std::vector<std::vector<int>>& candidates,
                                              const QuantumCircuit& rebased);
std::vector<PartitionChoice> score_candidates_serial(const DeviceModel& device,
                                                     const std::vector<std::vector<int>>& candidates,
                                                     const QuantumCircuit& rebased);

/// Greedy fidelity-scored allocation: programs in descending CX order (input
/// order on ties) each take the highest-scoring connected subset of the
/// remaining qubits, ties going to the lexicographically smallest subset.
/// Throws AllocationError when qubits run out or no connected subset of the
/// required size remains.
Allocation allocate_partitions(const DeviceModel& device, std::span<const QuantumCircuit> circuits);

/// Throws ValidationError unless every embedding is injective, connected on
/// the device, and disjoint from the others.
void check_allocation(const DeviceModel& device, const Allocation& allocation,
                      std::span<const QuantumCircuit> circuits);

}  // namespace qmp
