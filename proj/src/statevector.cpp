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

#include "qmp/statevector.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qmp/error.hpp"

namespace qmp {

Matrix2 single_qubit_matrix(const Gate& g) {
  using namespace std::complex_literals;
  const double c = std::cos(g.theta / 2.0);
  const double s = std::sin(g.theta / 2.0);
  switch (g.kind) {
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::SX: return {Amplitude(0.5, 0.5), Amplitude(0.5, -0.5), Amplitude(0.5, -0.5), Amplitude(0.5, 0.5)};
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      return {r, r, r, -r};
    }
    case GateKind::Rz: return {std::polar(1.0, -g.theta / 2.0), 0.0, 0.0, std::polar(1.0, g.theta / 2.0)};
    case GateKind::Rx: return {c, -1i * s, -1i * s, c};
    case GateKind::U1q:
      return {c, -1i * std::polar(1.0, -g.phi) * s, -1i * std::polar(1.0, g.phi) * s, c};
    default: break;
  }
  throw ValidationError("gate", std::string(gate_name(g.kind)) + " is not a one-qubit unitary");
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) throw ValidationError("n_qubits", "unsupported state size");
  amps_.assign(std::size_t{1} << n_qubits, Amplitude{});
  amps_[0] = 1.0;
}

void StateVector::reset(std::uint64_t index) {
  std::fill(amps_.begin(), amps_.end(), Amplitude{});
  amps_[index] = 1.0;
}

void StateVector::apply_matrix(int q, const Matrix2& m) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | bit];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply_cx(int control, int target) {
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
  }
}

void StateVector::apply_zz(int a, int b, double theta) {
  const std::size_t ab = std::size_t{1} << a;
  const std::size_t bb = std::size_t{1} << b;
  const Amplitude same = std::polar(1.0, -theta / 2.0);
  const Amplitude differ = std::polar(1.0, theta / 2.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const bool parity = ((i & ab) != 0) != ((i & bb) != 0);
    amps_[i] *= parity ? differ : same;
  }
}

void StateVector::apply_swap(int a, int b) {
  const std::size_t ab = std::size_t{1} << a;
  const std::size_t bb = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & ab) && !(i & bb)) std::swap(amps_[i], amps_[(i & ~ab) | bb]);
  }
}

void StateVector::apply_ccx(int c0, int c1, int target) {
  const std::size_t cm = (std::size_t{1} << c0) | (std::size_t{1} << c1);
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cm) == cm && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
  }
}

void StateVector::apply_pauli(int q, Pauli p) {
  using namespace std::complex_literals;
  const std::size_t bit = std::size_t{1} << q;
  switch (p) {
    case Pauli::I: return;
    case Pauli::X:
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
      }
      return;
    case Pauli::Y:
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amps_[i];
        amps_[i] = -1i * amps_[i | bit];
        amps_[i | bit] = 1i * a0;
      }
      return;
    case Pauli::Z:
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) amps_[i] = -amps_[i];
      }
      return;
  }
}

void StateVector::apply(const Gate& g, std::span<const int> qubit_map) {
  auto q = [&](std::size_t k) { return qubit_map.empty() ? g.qubits[k] : qubit_map[static_cast<std::size_t>(g.qubits[k])]; };
  switch (g.kind) {
    case GateKind::Measure:
    case GateKind::Barrier: return;
    case GateKind::CX: return apply_cx(q(0), q(1));
    case GateKind::ZZ: return apply_zz(q(0), q(1), g.theta);
    case GateKind::SWAP: return apply_swap(q(0), q(1));
    case GateKind::CCX: return apply_ccx(q(0), q(1), q(2));
    default: return apply_matrix(q(0), single_qubit_matrix(g));
  }
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amps_) total += std::norm(a);
  return total;
}

}  // namespace qmp
