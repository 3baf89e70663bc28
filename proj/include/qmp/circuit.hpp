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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmp {

enum class GateKind {
  X,
  SX,
  H,
  Rz,
  Rx,
  U1q,  // exp(-i theta/2 (cos(phi) X + sin(phi) Y))
  CX,
  ZZ,  // exp(-i theta/2 Z(x)Z)
  CCX,
  SWAP,
  Measure,
  Barrier,
};

std::string_view gate_name(GateKind kind);

/// Number of qubits a gate of this kind acts on; 0 for Barrier (any arity).
std::size_t gate_arity(GateKind kind);

bool is_unitary(GateKind kind);  // false for Measure and Barrier
bool is_single_qubit(GateKind kind);
bool is_two_qubit(GateKind kind);

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;
  double theta = 0.0;
  double phi = 0.0;
  int cbit = -1;  // Measure only

  static Gate x(int q) { return {GateKind::X, {q}}; }
  static Gate sx(int q) { return {GateKind::SX, {q}}; }
  static Gate h(int q) { return {GateKind::H, {q}}; }
  static Gate rz(int q, double theta) { return {GateKind::Rz, {q}, theta}; }
  static Gate rx(int q, double theta) { return {GateKind::Rx, {q}, theta}; }
  static Gate u1q(int q, double theta, double phi) { return {GateKind::U1q, {q}, theta, phi}; }
  static Gate cx(int control, int target) { return {GateKind::CX, {control, target}}; }
  static Gate zz(int a, int b, double theta) { return {GateKind::ZZ, {a, b}, theta}; }
  static Gate ccx(int c0, int c1, int target) { return {GateKind::CCX, {c0, c1, target}}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}}; }
  static Gate measure(int q, int cbit) { return {GateKind::Measure, {q}, 0.0, 0.0, cbit}; }
  static Gate barrier(std::vector<int> qubits) { return {GateKind::Barrier, std::move(qubits)}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over logical qubits plus a measurement map (Measure
/// gates). Outcome bitstrings print classical bit 0 as the leftmost character.
struct QuantumCircuit {
  std::string name;
  int n_qubits = 0;
  int n_cbits = 0;
  std::vector<Gate> gates;

  QuantumCircuit() = default;
  QuantumCircuit(int qubits, int cbits, std::string circuit_name = {})
      : name(std::move(circuit_name)), n_qubits(qubits), n_cbits(cbits) {}

  QuantumCircuit& add(Gate g) {
    gates.push_back(std::move(g));
    return *this;
  }

  /// Throws ValidationError if any invariant (index bounds, distinct qubits,
  /// arity, finite angles, one Measure per cbit) is violated.
  void validate() const;

  friend bool operator==(const QuantumCircuit&, const QuantumCircuit&) = default;
};

struct CircuitStats {
  int n_qubits = 0;
  std::size_t total_gates = 0;  // unitary gates; Measure and Barrier excluded
  std::size_t cx_count = 0;     // two-qubit entangling gates (CX, ZZ, SWAP)
  std::size_t three_qubit_count = 0;
  std::size_t measure_count = 0;
  std::size_t depth = 0;
  std::vector<std::pair<int, int>> interaction_graph;  // sorted, (lo, hi)
};

CircuitStats circuit_stats(const QuantumCircuit& circuit);

/// Bernstein-Vazirani circuit over len(hidden) data qubits plus one ancilla
/// (the last qubit). Data qubit i is measured into cbit i.
QuantumCircuit generate_bv(std::string_view hidden);

/// Copy of `circuit` with Measure and Barrier gates removed.
QuantumCircuit strip_non_unitary(const QuantumCircuit& circuit);

}  // namespace qmp
