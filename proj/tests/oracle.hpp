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

// Test-side reference implementations. Deliberately independent of the
// library's StateVector: every gate is expanded into a dense 2^n x 2^n
// matrix from its textbook definition.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmp/circuit.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline constexpr double kPi = std::numbers::pi;

inline Mat identity(std::size_t dim) {
  Mat m(dim, std::vector<C>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out(n, std::vector<C>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == C(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// 2x2 matrix for a one-qubit gate, written out from the definitions.
inline std::array<C, 4> one_qubit(const qmp::Gate& g) {
  const C i(0.0, 1.0);
  const double t = g.theta;
  switch (g.kind) {
    case qmp::GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case qmp::GateKind::SX:
      return {C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5)};
    case qmp::GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case qmp::GateKind::Rz:
      return {std::exp(-i * t / 2.0), 0.0, 0.0, std::exp(i * t / 2.0)};
    case qmp::GateKind::Rx:
      return {std::cos(t / 2), -i * std::sin(t / 2), -i * std::sin(t / 2), std::cos(t / 2)};
    case qmp::GateKind::U1q: {
      // exp(-i t/2 (cos(phi) X + sin(phi) Y))
      const C off = -i * std::sin(t / 2);
      return {std::cos(t / 2), off * std::exp(-i * g.phi), off * std::exp(i * g.phi), std::cos(t / 2)};
    }
    default:
      throw std::logic_error("not a one-qubit gate");
  }
}

inline int bit(std::size_t idx, int q) { return static_cast<int>((idx >> q) & 1u); }

// Column `col` of the gate's full unitary as (row, amplitude) entries;
// qubit q is bit q of the index.
inline std::vector<std::pair<std::size_t, C>> gate_column(const qmp::Gate& g, std::size_t col) {
  const auto& q = g.qubits;
  switch (g.kind) {
    case qmp::GateKind::CX:
      return {{bit(col, q[0]) ? col ^ (std::size_t{1} << q[1]) : col, 1.0}};
    case qmp::GateKind::CCX:
      return {{(bit(col, q[0]) && bit(col, q[1])) ? col ^ (std::size_t{1} << q[2]) : col, 1.0}};
    case qmp::GateKind::SWAP: {
      std::size_t row = col;
      if (bit(col, q[0]) != bit(col, q[1])) row ^= (std::size_t{1} << q[0]) | (std::size_t{1} << q[1]);
      return {{row, 1.0}};
    }
    case qmp::GateKind::ZZ: {
      const double parity = bit(col, q[0]) == bit(col, q[1]) ? 1.0 : -1.0;
      return {{col, std::exp(C(0.0, -g.theta / 2.0 * parity))}};
    }
    default: {
      const auto u = one_qubit(g);
      const int b = bit(col, q[0]);
      const std::size_t base = col & ~(std::size_t{1} << q[0]);
      return {{base, u[0 * 2 + b]}, {base | (std::size_t{1} << q[0]), u[1 * 2 + b]}};
    }
  }
}

inline Mat gate_matrix(const qmp::Gate& g, int n) {
  const std::size_t dim = std::size_t{1} << n;
  Mat m(dim, std::vector<C>(dim, 0.0));
  for (std::size_t col = 0; col < dim; ++col) {
    for (const auto& [row, a] : gate_column(g, col)) m[row][col] += a;
  }
  return m;
}

// State after the unitary part of the circuit, started in |0...0>.
inline std::vector<C> evolve(const qmp::QuantumCircuit& c) {
  std::vector<C> psi(std::size_t{1} << c.n_qubits, 0.0);
  psi[0] = 1.0;
  for (const auto& g : c.gates) {
    if (g.kind == qmp::GateKind::Measure || g.kind == qmp::GateKind::Barrier) continue;
    std::vector<C> next(psi.size(), 0.0);
    for (std::size_t col = 0; col < psi.size(); ++col) {
      if (psi[col] == C(0.0)) continue;
      for (const auto& [row, a] : gate_column(g, col)) next[row] += a * psi[col];
    }
    psi = std::move(next);
  }
  return psi;
}

inline Mat circuit_unitary(const qmp::QuantumCircuit& c) {
  Mat u = identity(std::size_t{1} << c.n_qubits);
  for (const auto& g : c.gates) {
    if (g.kind == qmp::GateKind::Measure || g.kind == qmp::GateKind::Barrier) continue;
    u = multiply(gate_matrix(g, c.n_qubits), u);
  }
  return u;
}

// |tr(A^dagger B)| / dim
inline double overlap(const Mat& a, const Mat& b) {
  C tr = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) tr += std::conj(a[k][i]) * b[k][i];
  }
  return std::abs(tr) / static_cast<double>(a.size());
}

inline bool equivalent(const qmp::QuantumCircuit& a, const qmp::QuantumCircuit& b) {
  return overlap(circuit_unitary(a), circuit_unitary(b)) > 1.0 - 1e-9;
}

// Outcome probabilities of the circuit started in |0...0>, with each Measure
// writing its qubit into its cbit (cbit 0 leftmost). Unmeasured cbits read 0.
inline std::map<std::string, double> distribution(const qmp::QuantumCircuit& c) {
  const std::vector<C> psi = evolve(c);
  std::vector<std::pair<int, int>> measures;  // (qubit, cbit)
  for (const auto& g : c.gates) {
    if (g.kind == qmp::GateKind::Measure) measures.emplace_back(g.qubits[0], g.cbit);
  }
  std::map<std::string, double> out;
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    const double p = std::norm(psi[idx]);
    if (p < 1e-15) continue;
    std::string key(static_cast<std::size_t>(c.n_cbits), '0');
    for (auto [q, cb] : measures) key[static_cast<std::size_t>(cb)] = bit(idx, q) ? '1' : '0';
    out[key] += p;
  }
  return out;
}

// Relabels the touched qubits of a wide physical circuit onto 0..k-1 in
// increasing physical order, so the dense oracles can handle it.
inline qmp::QuantumCircuit compact(const qmp::QuantumCircuit& c) {
  std::map<int, int> remap;
  for (const auto& g : c.gates) {
    for (int q : g.qubits) remap.emplace(q, 0);
  }
  int next = 0;
  for (auto& [phys, idx] : remap) idx = next++;
  qmp::QuantumCircuit out(next, c.n_cbits, c.name);
  for (auto g : c.gates) {
    for (int& q : g.qubits) q = remap.at(q);
    out.add(g);
  }
  return out;
}

inline std::map<std::string, double> tensor(const std::map<std::string, double>& a,
                                            const std::map<std::string, double>& b) {
  std::map<std::string, double> out;
  for (const auto& [ka, pa] : a) {
    for (const auto& [kb, pb] : b) out[ka + kb] += pa * pb;
  }
  return out;
}

inline double total_variation(const std::map<std::string, double>& a, const std::map<std::string, double>& b) {
  std::map<std::string, double> diff = a;
  for (const auto& [k, p] : b) diff[k] -= p;
  double tv = 0.0;
  for (const auto& [k, d] : diff) tv += std::abs(d);
  return tv / 2.0;
}

// Binomial standard deviation of a frequency estimated from n trials.
inline double binomial_sigma(double p, double n) { return std::sqrt(std::max(p * (1.0 - p), 1e-12) / n); }

}  // namespace oracle
