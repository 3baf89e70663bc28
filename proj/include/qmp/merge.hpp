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

#include <span>
#include <utility>
#include <vector>

#include "qmp/circuit.hpp"
#include "qmp/device.hpp"

namespace qmp {

/// Half-open classical-bit range [first, second) owned by one program.
using CbitRange = std::pair<int, int>;

/// Combines physical circuits on pairwise-disjoint qubits into one circuit on
/// device.n_qubits. Gates are interleaved round-robin, one gate per program
/// per round, so each program keeps its internal order. Classical bits are
/// concatenated in program order. Throws ValidationError on shared qubits.
QuantumCircuit merge_programs(std::span<const QuantumCircuit> physical_circuits, const DeviceModel& device);

/// Classical-bit ranges of each program inside the merged circuit.
std::vector<CbitRange> merged_cbit_ranges(std::span<const QuantumCircuit> physical_circuits);

}  // namespace qmp
