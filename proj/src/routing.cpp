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

#include "qmp/routing.hpp"

#include "qmp/error.hpp"
#include "qmp/rebase.hpp"

namespace qmp {

RoutedCircuit route_to_partition(const QuantumCircuit& circuit, std::span<const int> embedding,
                                 const DeviceModel& device) {
  if (static_cast<int>(embedding.size()) != circuit.n_qubits) {
    throw ValidationError("embedding", "size " + std::to_string(embedding.size()) + " does not match " +
                                           std::to_string(circuit.n_qubits) + " logical qubits");
  }
  const auto n_phys = static_cast<std::size_t>(device.n_qubits);
  std::vector<bool> image(n_phys, false);
  for (int p : embedding) {
    if (p < 0 || p >= device.n_qubits) throw ValidationError("embedding", "physical qubit " + std::to_string(p) + " out of range");
    if (image[static_cast<std::size_t>(p)]) throw ValidationError("embedding", "physical qubit " + std::to_string(p) + " used twice");
    image[static_cast<std::size_t>(p)] = true;
  }
  if (!embedding.empty() && !device.coupling.is_connected_subset(embedding)) {
    throw ValidationError("embedding", "disconnected embedding");
  }

  RoutedCircuit out;
  out.circuit = QuantumCircuit(device.n_qubits, circuit.n_cbits, circuit.name);
  out.initial_layout.assign(embedding.begin(), embedding.end());
  std::vector<int> layout = out.initial_layout;
  std::vector<int> owner(n_phys, -1);  // physical -> logical
  for (std::size_t l = 0; l < layout.size(); ++l) owner[static_cast<std::size_t>(layout[l])] = static_cast<int>(l);

  auto& gates = out.circuit.gates;
  auto swap_physical = [&](int pa, int pb) {
    gates.push_back(Gate::cx(pa, pb));
    gates.push_back(Gate::cx(pb, pa));
    gates.push_back(Gate::cx(pa, pb));
    ++out.swaps;
    const int la = owner[static_cast<std::size_t>(pa)];
    const int lb = owner[static_cast<std::size_t>(pb)];
    owner[static_cast<std::size_t>(pa)] = lb;
    owner[static_cast<std::size_t>(pb)] = la;
    if (la >= 0) layout[static_cast<std::size_t>(la)] = pb;
    if (lb >= 0) layout[static_cast<std::size_t>(lb)] = pa;
  };

  auto route_gate = [&](const Gate& g) {
    Gate mapped = g;
    for (int& q : mapped.qubits) q = layout[static_cast<std::size_t>(q)];
    if (gate_arity(g.kind) == 2 && !device.coupling.has_edge(mapped.qubits[0], mapped.qubits[1])) {
      const std::vector<int> path = device.coupling.shortest_path(mapped.qubits[0], mapped.qubits[1], image);
      if (path.size() < 2) throw ValidationError("embedding", "disconnected embedding");
      for (std::size_t k = 0; k + 2 < path.size(); ++k) swap_physical(path[k], path[k + 1]);
      mapped.qubits[0] = layout[static_cast<std::size_t>(g.qubits[0])];
      mapped.qubits[1] = layout[static_cast<std::size_t>(g.qubits[1])];
    }
    gates.push_back(std::move(mapped));
  };

  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::CCX) {
      for (const Gate& sub : decompose_ccx(g.qubits[0], g.qubits[1], g.qubits[2])) route_gate(sub);
    } else {
      route_gate(g);
    }
  }
  out.final_layout = layout;
  return out;
}

}  // namespace qmp
