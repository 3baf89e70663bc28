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

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qmp/circuit.hpp"

namespace qmp {

using Amplitude = std::complex<double>;

/// Row-major 2x2 unitary.
using Matrix2 = std::array<Amplitude, 4>;

/// Matrix of a one-qubit unitary gate (X, SX, H, Rz, Rx, U1q).
Matrix2 single_qubit_matrix(const Gate& g);

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Dense state over n qubits; qubit q is bit q of the basis-state index.
class StateVector {
 public:
  explicit StateVector(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }

  /// Resets to the computational basis state |index>.
  void reset(std::uint64_t index = 0);

  void apply_matrix(int q, const Matrix2& m);
  void apply_cx(int control, int target);
  void apply_zz(int a, int b, double theta);
  void apply_swap(int a, int b);
  void apply_ccx(int c0, int c1, int target);
  void apply_pauli(int q, Pauli p);

  /// Applies a unitary gate whose operands are remapped through `qubit_map`
  /// (identity when empty). Measure and Barrier are no-ops.
  void apply(const Gate& g, std::span<const int> qubit_map = {});

  double norm_squared() const;

 private:
  int n_qubits_;
  std::vector<Amplitude> amps_;
};

}  // namespace qmp
