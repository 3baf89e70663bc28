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

#include <cstdint>
#include <map>
#include <string>

#include "qmp/circuit.hpp"
#include "qmp/device.hpp"
#include "qmp/schedule.hpp"

namespace qmp {

/// Exact outcome probabilities keyed by bitstring (cbit 0 leftmost).
struct Distribution {
  int n_bits = 0;
  std::map<std::string, double> probabilities;

  double probability(const std::string& bits) const;
  double total() const;
};

struct OutcomeHistogram {
  int n_bits = 0;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;

  std::uint64_t count(const std::string& bits) const;
  friend bool operator==(const OutcomeHistogram&, const OutcomeHistogram&) = default;
};

/// Maximum number of active (touched) qubits a simulation may span.
inline constexpr int kMaxSimulatedQubits = 16;

/// Probabilities below this are dropped from a Distribution.
inline constexpr double kPruneThreshold = 1e-14;

/// Noiseless outcome distribution. Only qubits touched by some gate are
/// simulated, and independent blocks (no multi-qubit gate connects them) are
/// evolved separately and combined as a product. Requires measurements to be
/// terminal per qubit. Throws ValidationError when more than
/// kMaxSimulatedQubits qubits are active.
Distribution ideal_distribution(const QuantumCircuit& circuit);

/// Reference path for ideal_distribution: one dense register over all active
/// qubits, no block decomposition.
Distribution ideal_distribution_dense(const QuantumCircuit& circuit);

/// Shot-based Monte Carlo with stochastic Pauli injection. After every
/// one-qubit gate a uniformly random non-identity Pauli hits with probability
/// p1q; after every two-qubit gate a random non-identity two-qubit Pauli hits
/// with probability p2q, amplified to min(1, lambda * p2q) when crosstalk is
/// enabled, a schedule is supplied and the schedule marks the gate exposed.
/// Every measured bit flips independently with probability p_ro.
///
/// Shot k draws from its own generator seeded from (seed, k), so the result
/// is identical for any thread count. OpenMP-parallel over shots.
OutcomeHistogram sample_counts(const QuantumCircuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                               std::uint64_t seed, const Schedule* schedule = nullptr);

/// Single-threaded reference for sample_counts; bitwise-identical output.
OutcomeHistogram sample_counts_serial(const QuantumCircuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                                      std::uint64_t seed, const Schedule* schedule = nullptr);

/// splitmix64 finalizer, used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace qmp
