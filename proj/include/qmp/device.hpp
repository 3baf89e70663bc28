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
#include <optional>
#include <string>
#include <string_view>

#include "qmp/circuit.hpp"
#include "qmp/graph.hpp"
#include "qmp/rebase.hpp"

namespace qmp {

enum class Technology { Superconducting, TrappedIon };

std::string_view technology_name(Technology t);

/// Per-submission pricing:
///   credits = fixed_per_submission + shots * (w1q*N1q + w2q*N2q + wmeas*Nm) / divisor
struct CostParams {
  double fixed_per_submission = 5.0;
  double w1q = 1.0;
  double w2q = 10.0;
  double wmeas = 5.0;
  double divisor = 5000.0;

  void validate() const;
  friend bool operator==(const CostParams&, const CostParams&) = default;
};

/// Error amplification for two-qubit gates that run concurrently with a
/// gate on an adjacent coupler.
struct CrosstalkParams {
  bool enabled = false;
  double lambda = 1.0;

  friend bool operator==(const CrosstalkParams&, const CrosstalkParams&) = default;
};

inline constexpr double kDefaultCrosstalkLambda = 2.0;

struct DeviceModel {
  std::string name;
  Technology technology = Technology::Superconducting;
  int n_qubits = 0;
  Graph coupling;
  Basis basis = Basis::Superconducting;
  double err_1q = 0.0;
  double err_2q = 0.0;
  double err_ro = 0.0;
  std::optional<int> zone_capacity;  // max concurrent two-qubit gates
  CostParams cost;
  CrosstalkParams crosstalk;

  void validate() const;
  friend bool operator==(const DeviceModel&, const DeviceModel&) = default;
};

/// Stochastic Pauli-injection noise.
struct NoiseModel {
  double p1q = 0.0;
  double p2q = 0.0;
  double p_ro = 0.0;
  double crosstalk_lambda = 1.0;
  bool crosstalk_enabled = false;

  void validate() const;

  /// Injection probability for a two-qubit gate; `exposed` marks a gate that
  /// overlaps in time with another two-qubit gate on an adjacent coupler.
  double two_qubit_probability(bool exposed) const;

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

enum class BuiltinDevice { IbmqMumbaiLike, H12Like };

/// 28-edge heavy-hex coupling of the 27-qubit Falcon layout.
Graph heavy_hex_27();

DeviceModel builtin_device(BuiltinDevice which);

/// "ibmq_mumbai_like" or "h1_2_like"; std::nullopt otherwise.
std::optional<DeviceModel> builtin_device(std::string_view name);

/// Parses a device-config JSON document. Unknown fields, out-of-range
/// probabilities and invalid coupling edges raise ValidationError naming the
/// field.
DeviceModel load_device(std::string_view json_text);
std::string dump_device(const DeviceModel& device);

/// A builtin name or a path to a device-config file.
DeviceModel resolve_device(const std::string& name_or_path);

NoiseModel derive_noise_model(const DeviceModel& device);

struct GateCounts {
  std::size_t one_qubit = 0;
  std::size_t two_qubit = 0;
  std::size_t measure = 0;
  std::size_t three_qubit = 0;
};

GateCounts count_gates(const QuantumCircuit& circuit);

/// Credits charged for one submission of `circuit` (counted after rebasing to
/// the device basis).
double estimate_cost(const DeviceModel& device, const QuantumCircuit& circuit, std::size_t shots);

/// Cost formula evaluated on explicit gate counts.
double cost_from_counts(const CostParams& cost, const GateCounts& counts, std::size_t shots);

}  // namespace qmp
