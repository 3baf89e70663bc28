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
#include <vector>

#include "qmp/circuit.hpp"
#include "qmp/device.hpp"

namespace qmp {

struct RoutedCircuit {
  QuantumCircuit circuit;            // over device.n_qubits physical qubits
  std::vector<int> initial_layout;   // logical -> physical before the first gate
  std::vector<int> final_layout;     // logical -> physical after the last gate
  std::size_t swaps = 0;             // inserted SWAPs (each emitted as 3 CX)
};

/// Maps `circuit` onto the physical qubits `embedding[logical]` and inserts
/// SWAP chains along shortest paths inside the embedding image whenever a
/// two-qubit gate lands on an uncoupled pair. The moving operand is the
/// first one; paths never leave the image. CCX gates are expanded into the
/// six-CX network first. Measurements follow the current layout, so the
/// outcome distribution is unchanged.
///
/// Throws ValidationError when the embedding is not injective, out of range,
/// the wrong size, or does not induce a connected subgraph.
RoutedCircuit route_to_partition(const QuantumCircuit& circuit, std::span<const int> embedding,
                                 const DeviceModel& device);

}  // namespace qmp
