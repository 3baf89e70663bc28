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

#include "qmp/merge.hpp"

#include <algorithm>

#include "qmp/error.hpp"

namespace qmp {

std::vector<CbitRange> merged_cbit_ranges(std::span<const QuantumCircuit> physical_circuits) {
  std::vector<CbitRange> ranges;
  int offset = 0;
  for (const auto& c : physical_circuits) {
    ranges.emplace_back(offset, offset + c.n_cbits);
    offset += c.n_cbits;
  }
  return ranges;
}

QuantumCircuit merge_programs(std::span<const QuantumCircuit> physical_circuits, const DeviceModel& device) {
  std::vector<int> owner(static_cast<std::size_t>(device.n_qubits), -1);
  for (std::size_t k = 0; k < physical_circuits.size(); ++k) {
    const auto& c = physical_circuits[k];
    if (c.n_qubits > device.n_qubits) {
      throw ValidationError("programs[" + std::to_string(k) + "]", "circuit wider than device " + device.name);
    }
    for (const Gate& g : c.gates) {
      for (int q : g.qubits) {
        int& o = owner[static_cast<std::size_t>(q)];
        if (o >= 0 && o != static_cast<int>(k)) {
          throw ValidationError("programs", "overlapping qubit sets: physical qubit " + std::to_string(q) +
                                                " used by programs " + std::to_string(o) + " and " + std::to_string(k));
        }
        o = static_cast<int>(k);
      }
    }
  }

  const auto ranges = merged_cbit_ranges(physical_circuits);
  QuantumCircuit merged(device.n_qubits, ranges.empty() ? 0 : ranges.back().second, "merged");
  for (std::size_t k = 0; k < physical_circuits.size(); ++k) {
    if (!physical_circuits[k].name.empty()) merged.name += "_" + physical_circuits[k].name;
  }
  std::vector<std::size_t> cursor(physical_circuits.size(), 0);
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (std::size_t k = 0; k < physical_circuits.size(); ++k) {
      const auto& gates = physical_circuits[k].gates;
      if (cursor[k] >= gates.size()) continue;
      Gate g = gates[cursor[k]++];
      if (g.kind == GateKind::Measure) g.cbit += ranges[k].first;
      merged.gates.push_back(std::move(g));
      progressed = true;
    }
  }
  return merged;
}

}  // namespace qmp
