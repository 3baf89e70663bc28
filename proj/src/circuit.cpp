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

#include "qmp/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qmp/error.hpp"

namespace qmp {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::SX: return "sx";
    case GateKind::H: return "h";
    case GateKind::Rz: return "rz";
    case GateKind::Rx: return "rx";
    case GateKind::U1q: return "u1q";
    case GateKind::CX: return "cx";
    case GateKind::ZZ: return "zz";
    case GateKind::CCX: return "ccx";
    case GateKind::SWAP: return "swap";
    case GateKind::Measure: return "measure";
    case GateKind::Barrier: return "barrier";
  }
  return "?";
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::ZZ:
    case GateKind::SWAP: return 2;
    case GateKind::CCX: return 3;
    case GateKind::Barrier: return 0;
    default: return 1;
  }
}

bool is_unitary(GateKind kind) { return kind != GateKind::Measure && kind != GateKind::Barrier; }

bool is_single_qubit(GateKind kind) { return is_unitary(kind) && gate_arity(kind) == 1; }

bool is_two_qubit(GateKind kind) { return gate_arity(kind) == 2; }

void QuantumCircuit::validate() const {
  if (n_qubits < 0) throw ValidationError("n_qubits", "negative");
  if (n_cbits < 0) throw ValidationError("n_cbits", "negative");
  std::vector<bool> cbit_used(static_cast<std::size_t>(n_cbits), false);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const std::string where = "gates[" + std::to_string(i) + "]";
    const std::size_t arity = gate_arity(g.kind);
    if (arity != 0 && g.qubits.size() != arity) {
      throw ValidationError(where, std::string(gate_name(g.kind)) + " expects " + std::to_string(arity) +
                                       " qubits, got " + std::to_string(g.qubits.size()));
    }
    if (g.kind == GateKind::Barrier && g.qubits.empty()) throw ValidationError(where, "barrier without qubits");
    for (int q : g.qubits) {
      if (q < 0 || q >= n_qubits) {
        throw ValidationError(where, "qubit index " + std::to_string(q) + " out of range [0, " +
                                         std::to_string(n_qubits) + ")");
      }
    }
    std::set<int> distinct(g.qubits.begin(), g.qubits.end());
    if (distinct.size() != g.qubits.size()) throw ValidationError(where, "repeated qubit operand");
    if (!std::isfinite(g.theta) || !std::isfinite(g.phi)) throw ValidationError(where, "non-finite angle");
    if (g.kind == GateKind::Measure) {
      if (g.cbit < 0 || g.cbit >= n_cbits) {
        throw ValidationError(where, "cbit " + std::to_string(g.cbit) + " out of range [0, " +
                                         std::to_string(n_cbits) + ")");
      }
      if (cbit_used[static_cast<std::size_t>(g.cbit)]) {
        throw ValidationError(where, "cbit " + std::to_string(g.cbit) + " measured twice");
      }
      cbit_used[static_cast<std::size_t>(g.cbit)] = true;
    }
  }
}

CircuitStats circuit_stats(const QuantumCircuit& circuit) {
  CircuitStats stats;
  stats.n_qubits = circuit.n_qubits;
  std::set<std::pair<int, int>> edges;
  std::vector<std::size_t> level(static_cast<std::size_t>(std::max(circuit.n_qubits, 0)), 0);
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::Measure) {
      ++stats.measure_count;
      continue;
    }
    if (g.kind == GateKind::Barrier) continue;
    ++stats.total_gates;
    if (is_two_qubit(g.kind)) {
      ++stats.cx_count;
      edges.insert(std::minmax(g.qubits[0], g.qubits[1]));
    } else if (g.kind == GateKind::CCX) {
      ++stats.three_qubit_count;
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) edges.insert(std::minmax(g.qubits[a], g.qubits[b]));
      }
    }
    std::size_t start = 0;
    for (int q : g.qubits) start = std::max(start, level[static_cast<std::size_t>(q)]);
    for (int q : g.qubits) level[static_cast<std::size_t>(q)] = start + 1;
    stats.depth = std::max(stats.depth, start + 1);
  }
  stats.interaction_graph.assign(edges.begin(), edges.end());
  return stats;
}

QuantumCircuit generate_bv(std::string_view hidden) {
  if (hidden.empty()) throw ValidationError("hidden", "empty hidden string");
  for (char c : hidden) {
    if (c != '0' && c != '1') throw ValidationError("hidden", "expected a string of '0'/'1'");
  }
  const int n = static_cast<int>(hidden.size());
  QuantumCircuit c(n + 1, n, "bv" + std::to_string(n + 1));
  const int ancilla = n;
  c.add(Gate::x(ancilla));
  for (int q = 0; q <= n; ++q) c.add(Gate::h(q));
  for (int q = 0; q < n; ++q) {
    if (hidden[static_cast<std::size_t>(q)] == '1') c.add(Gate::cx(q, ancilla));
  }
  for (int q = 0; q <= n; ++q) c.add(Gate::h(q));
  for (int q = 0; q < n; ++q) c.add(Gate::measure(q, q));
  return c;
}

QuantumCircuit strip_non_unitary(const QuantumCircuit& circuit) {
  QuantumCircuit out(circuit.n_qubits, circuit.n_cbits, circuit.name);
  for (const Gate& g : circuit.gates) {
    if (is_unitary(g.kind)) out.add(g);
  }
  return out;
}

}  // namespace qmp
