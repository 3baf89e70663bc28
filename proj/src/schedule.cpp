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

#include "qmp/schedule.hpp"

#include <algorithm>

#include "qmp/error.hpp"

namespace qmp {
namespace {

bool couplers_adjacent(const Graph& coupling, const Gate& a, const Gate& b) {
  for (int p : a.qubits) {
    for (int q : b.qubits) {
      if (coupling.has_edge(p, q)) return true;
    }
  }
  return false;
}

}  // namespace

Schedule schedule_circuit(const QuantumCircuit& circuit, const DeviceModel& device, const ScheduleWeights& weights) {
  if (circuit.n_qubits > device.n_qubits) throw ValidationError("circuit", "wider than device " + device.name);
  const std::size_t n = circuit.gates.size();
  Schedule s;
  s.start.assign(n, 0);
  s.length.assign(n, 0);
  s.crosstalk_exposed.assign(n, false);

  std::vector<std::size_t> qubit_free(static_cast<std::size_t>(circuit.n_qubits), 0);
  std::vector<std::size_t> load;  // two-qubit gates per slice
  const std::size_t cap = device.zone_capacity ? static_cast<std::size_t>(*device.zone_capacity) : 0;

  for (std::size_t i = 0; i < n; ++i) {
    const Gate& g = circuit.gates[i];
    std::size_t ready = 0;
    for (int q : g.qubits) ready = std::max(ready, qubit_free[static_cast<std::size_t>(q)]);
    if (g.kind == GateKind::Barrier) {
      for (int q : g.qubits) qubit_free[static_cast<std::size_t>(q)] = ready;
      s.start[i] = ready;
      continue;
    }
    const bool two_qubit = gate_arity(g.kind) >= 2;
    const std::size_t len = g.kind == GateKind::Measure ? weights.measure
                            : two_qubit                 ? weights.two_qubit
                                                        : weights.one_qubit;
    std::size_t t = ready;
    if (two_qubit && cap > 0) {
      auto fits = [&](std::size_t at) {
        for (std::size_t k = at; k < at + len && k < load.size(); ++k) {
          if (load[k] >= cap) return false;
        }
        return true;
      };
      while (!fits(t)) ++t;
    }
    s.start[i] = t;
    s.length[i] = len;
    if (two_qubit) {
      if (load.size() < t + len) load.resize(t + len, 0);
      for (std::size_t k = t; k < t + len; ++k) ++load[k];
    }
    for (int q : g.qubits) qubit_free[static_cast<std::size_t>(q)] = t + len;
    s.duration = std::max(s.duration, t + len);
  }

  s.slices.assign(s.duration, {});
  s.two_qubit_per_slice.assign(s.duration, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = s.start[i]; k < s.start[i] + s.length[i]; ++k) {
      s.slices[k].push_back(i);
      if (gate_arity(circuit.gates[i].kind) >= 2) ++s.two_qubit_per_slice[k];
    }
  }
  for (const auto& slice : s.slices) {
    for (std::size_t a = 0; a < slice.size(); ++a) {
      const Gate& ga = circuit.gates[slice[a]];
      if (gate_arity(ga.kind) != 2) continue;
      for (std::size_t b = a + 1; b < slice.size(); ++b) {
        const Gate& gb = circuit.gates[slice[b]];
        if (gate_arity(gb.kind) != 2) continue;
        if (couplers_adjacent(device.coupling, ga, gb)) {
          s.crosstalk_exposed[slice[a]] = true;
          s.crosstalk_exposed[slice[b]] = true;
        }
      }
    }
  }
  return s;
}

}  // namespace qmp
