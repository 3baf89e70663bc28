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

#include "qmp/circuit.hpp"

namespace qmp {

/// Parses the OpenQASM 2.0 subset used by the benchmark corpus.
///
/// Accepted statements: the `OPENQASM 2.0;` header and `include` lines
/// (ignored), a single `qreg`, at most one `creg`, the gates x, sx, h, rz, rx,
/// cx, ccx, swap, measure and barrier, plus the native trapped-ion gates
/// u1q(theta, phi) and zz(theta) so that rebased circuits round-trip. Angle
/// arguments are arithmetic expressions over numbers and `pi`. A register
/// name without an index broadcasts a one-qubit gate, measure or barrier over
/// the whole register.
///
/// Throws ParseError (with 1-based line/column) on syntax and register-bounds
/// errors and UnsupportedGateError for any other gate name.
QuantumCircuit parse_qasm(std::string_view text, std::string name = {});

/// Serializes with 17 significant digits per angle so that
/// parse_qasm(emit_qasm(c)) reproduces c gate-for-gate.
std::string emit_qasm(const QuantumCircuit& circuit);

QuantumCircuit load_qasm_file(const std::string& path);

}  // namespace qmp
