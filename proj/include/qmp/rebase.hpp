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

#include <string>
#include <string_view>
#include <vector>

#include "qmp/circuit.hpp"

namespace qmp {

enum class Basis {
  Superconducting,  // {Rz, SX, X, CX}
  TrappedIon,       // {U1q, Rz, ZZ}
};

std::string_view basis_name(Basis basis);
Basis parse_basis(std::string_view name);  // throws ValidationError

bool in_basis(GateKind kind, Basis basis);  // Measure and Barrier always pass

/// Standard T/T-dagger Toffoli network with six CX gates (T = Rz(pi/4) up to
/// global phase).
std::vector<Gate> decompose_ccx(int c0, int c1, int target);

/// Rewrites every gate into the native set of `basis`. Gates already native
/// are copied unchanged; CCX is expanded through decompose_ccx first. The
/// result equals the input up to global phase.
QuantumCircuit rebase_to_basis(const QuantumCircuit& circuit, Basis basis);

/// True iff the two measurement-free circuits implement the same unitary up
/// to global phase: |tr(Ua^dagger Ub)| / 2^n > 1 - 1e-9. Limited to 10 qubits.
bool verify_equivalence(const QuantumCircuit& a, const QuantumCircuit& b);

/// |tr(Ua^dagger Ub)| / 2^n, the quantity verify_equivalence thresholds.
double unitary_overlap(const QuantumCircuit& a, const QuantumCircuit& b);

}  // namespace qmp
