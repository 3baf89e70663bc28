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
#include <vector>

#include "qmp/circuit.hpp"
#include "qmp/device.hpp"

namespace qmp {

/// Abstract time units per gate class.
struct ScheduleWeights {
  std::size_t one_qubit = 1;
  std::size_t two_qubit = 2;
  std::size_t measure = 1;
};

/// Time-sliced execution plan. Gate i occupies slices
/// [start[i], start[i] + length[i]); barriers have length 0.
struct Schedule {
  std::vector<std::size_t> start;
  std::vector<std::size_t> length;
  std::size_t duration = 0;
  std::vector<std::vector<std::size_t>> slices;     // gate indices active per slice
  std::vector<std::size_t> two_qubit_per_slice;
  /// Two-qubit gates that overlap in time with another two-qubit gate on an
  /// adjacent coupler (some device edge joins the two endpoint pairs).
  std::vector<bool> crosstalk_exposed;
};

/// ASAP list scheduling in gate order: each gate starts at the earliest slice
/// at which its qubits are free and, on devices with a zone capacity, every
/// slice it spans still has room for another two-qubit gate. Barriers
/// synchronize their qubits.
Schedule schedule_circuit(const QuantumCircuit& circuit, const DeviceModel& device, const ScheduleWeights& weights = {});

}  // namespace qmp
