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

#include "qmp/rebase.hpp"

#include <cmath>
#include <numbers>

#include "qmp/error.hpp"
#include "qmp/statevector.hpp"

namespace qmp {
namespace {

constexpr double kPi = std::numbers::pi;

void emit_superconducting(const Gate& g, std::vector<Gate>& out);
void emit_trapped_ion(const Gate& g, std::vector<Gate>& out);

// rz(a) sx rz(b) sx rz(c) realizes Rz(c - pi) Ry(b - pi) Rz(a) up to phase.
void emit_zyz_superconducting(int q, double phi, double theta, double lambda, std::vector<Gate>& out) {
  out.push_back(Gate::rz(q, lambda));
  out.push_back(Gate::sx(q));
  out.push_back(Gate::rz(q, theta + kPi));
  out.push_back(Gate::sx(q));
  out.push_back(Gate::rz(q, phi + kPi));
}

void emit_superconducting(const Gate& g, std::vector<Gate>& out) {
  if (in_basis(g.kind, Basis::Superconducting)) {
    out.push_back(g);
    return;
  }
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::H:
      out.push_back(Gate::rz(q[0], kPi / 2));
      out.push_back(Gate::sx(q[0]));
      out.push_back(Gate::rz(q[0], kPi / 2));
      return;
    case GateKind::Rx:
      // Rx(t) = Rz(-pi/2) Ry(t) Rz(pi/2)
      emit_zyz_superconducting(q[0], -kPi / 2, g.theta, kPi / 2, out);
      return;
    case GateKind::U1q:
      // U1q(t, p) = Rz(p) Rx(t) Rz(-p)
      emit_zyz_superconducting(q[0], g.phi - kPi / 2, g.theta, kPi / 2 - g.phi, out);
      return;
    case GateKind::ZZ:
      out.push_back(Gate::cx(q[0], q[1]));
      out.push_back(Gate::rz(q[1], g.theta));
      out.push_back(Gate::cx(q[0], q[1]));
      return;
    case GateKind::SWAP:
      out.push_back(Gate::cx(q[0], q[1]));
      out.push_back(Gate::cx(q[1], q[0]));
      out.push_back(Gate::cx(q[0], q[1]));
      return;
    case GateKind::CCX:
      for (const Gate& sub : decompose_ccx(q[0], q[1], q[2])) emit_superconducting(sub, out);
      return;
    default: break;
  }
  throw ValidationError("gate", "no superconducting decomposition for " + std::string(gate_name(g.kind)));
}

void emit_trapped_ion(const Gate& g, std::vector<Gate>& out) {
  if (in_basis(g.kind, Basis::TrappedIon)) {
    out.push_back(g);
    return;
  }
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::X: out.push_back(Gate::u1q(q[0], kPi, 0.0)); return;
    case GateKind::SX: out.push_back(Gate::u1q(q[0], kPi / 2, 0.0)); return;
    case GateKind::Rx: out.push_back(Gate::u1q(q[0], g.theta, 0.0)); return;
    case GateKind::H:
      // H = Ry(pi/2) Z
      out.push_back(Gate::rz(q[0], kPi));
      out.push_back(Gate::u1q(q[0], kPi / 2, kPi / 2));
      return;
    case GateKind::CX: {
      const int c = q[0], t = q[1];
      // CX = (I x H) CZ (I x H), CZ ~ ZZ(-pi/2) (Rz(pi/2) x Rz(pi/2))
      emit_trapped_ion(Gate::h(t), out);
      out.push_back(Gate::zz(c, t, -kPi / 2));
      out.push_back(Gate::rz(c, kPi / 2));
      out.push_back(Gate::rz(t, kPi / 2));
      emit_trapped_ion(Gate::h(t), out);
      return;
    }
    case GateKind::SWAP:
      emit_trapped_ion(Gate::cx(q[0], q[1]), out);
      emit_trapped_ion(Gate::cx(q[1], q[0]), out);
      emit_trapped_ion(Gate::cx(q[0], q[1]), out);
      return;
    case GateKind::CCX:
      for (const Gate& sub : decompose_ccx(q[0], q[1], q[2])) emit_trapped_ion(sub, out);
      return;
    default: break;
  }
  throw ValidationError("gate", "no trapped-ion decomposition for " + std::string(gate_name(g.kind)));
}

}  // namespace

std::string_view basis_name(Basis basis) {
  return basis == Basis::Superconducting ? "superconducting" : "trappedion";
}

Basis parse_basis(std::string_view name) {
  if (name == "superconducting") return Basis::Superconducting;
  if (name == "trappedion") return Basis::TrappedIon;
  throw ValidationError("basis", "unknown basis '" + std::string(name) + "' (expected superconducting|trappedion)");
}

bool in_basis(GateKind kind, Basis basis) {
  if (!is_unitary(kind)) return true;
  switch (basis) {
    case Basis::Superconducting:
      return kind == GateKind::Rz || kind == GateKind::SX || kind == GateKind::X || kind == GateKind::CX;
    case Basis::TrappedIon: return kind == GateKind::U1q || kind == GateKind::Rz || kind == GateKind::ZZ;
  }
  return false;
}

std::vector<Gate> decompose_ccx(int a, int b, int c) {
  const double t = kPi / 4;
  return {
      Gate::h(c),      Gate::cx(b, c),  Gate::rz(c, -t), Gate::cx(a, c), Gate::rz(c, t),
      Gate::cx(b, c),  Gate::rz(c, -t), Gate::cx(a, c),  Gate::rz(b, t), Gate::rz(c, t),
      Gate::h(c),      Gate::cx(a, b),  Gate::rz(a, t),  Gate::rz(b, -t), Gate::cx(a, b),
  };
}

QuantumCircuit rebase_to_basis(const QuantumCircuit& circuit, Basis basis) {
  QuantumCircuit out(circuit.n_qubits, circuit.n_cbits, circuit.name);
  out.gates.reserve(circuit.gates.size() * 3);
  for (const Gate& g : circuit.gates) {
    if (basis == Basis::Superconducting) {
      emit_superconducting(g, out.gates);
    } else {
      emit_trapped_ion(g, out.gates);
    }
  }
  return out;
}

double unitary_overlap(const QuantumCircuit& a, const QuantumCircuit& b) {
  if (a.n_qubits != b.n_qubits) {
    throw ValidationError("n_qubits", "dimension mismatch (" + std::to_string(a.n_qubits) + " vs " +
                                          std::to_string(b.n_qubits) + ")");
  }
  if (a.n_qubits > 10) throw ValidationError("n_qubits", "equivalence check limited to 10 qubits");
  for (const QuantumCircuit* c : {&a, &b}) {
    for (const Gate& g : c->gates) {
      if (g.kind == GateKind::Measure) throw ValidationError("gates", "equivalence check requires measurement-free circuits");
    }
  }
  const std::size_t dim = std::size_t{1} << a.n_qubits;
  double re = 0.0, im = 0.0;
  // Column j contributes <Ua e_j | Ub e_j>.
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(dim); ++j) {
    StateVector sa(a.n_qubits), sb(b.n_qubits);
    sa.reset(static_cast<std::uint64_t>(j));
    sb.reset(static_cast<std::uint64_t>(j));
    for (const Gate& g : a.gates) sa.apply(g);
    for (const Gate& g : b.gates) sb.apply(g);
    Amplitude acc{};
    for (std::size_t i = 0; i < dim; ++i) acc += std::conj(sa.amplitudes()[i]) * sb.amplitudes()[i];
    re += acc.real();
    im += acc.imag();
  }
  return std::abs(Amplitude(re, im)) / static_cast<double>(dim);
}

bool verify_equivalence(const QuantumCircuit& a, const QuantumCircuit& b) {
  return unitary_overlap(a, b) > 1.0 - 1e-9;
}

}  // namespace qmp
