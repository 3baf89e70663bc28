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

#include "qmp/device.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qmp/error.hpp"

namespace qmp {
namespace {

using nlohmann::ordered_json;

void check_probability(const char* field, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(field, "probability " + std::to_string(p) + " outside [0, 1]");
  }
}

void reject_unknown(const ordered_json& obj, const std::set<std::string>& allowed, const std::string& prefix) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ValidationError(prefix + key, "unknown field");
  }
}

template <typename T>
T get_field(const ordered_json& obj, const std::string& key, const std::string& prefix) {
  if (!obj.contains(key)) throw ValidationError(prefix + key, "missing required field");
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(prefix + key, "wrong type");
  }
}

}  // namespace

std::string_view technology_name(Technology t) {
  return t == Technology::Superconducting ? "superconducting" : "trappedion";
}

void CostParams::validate() const {
  for (auto [field, v] : {std::pair{"cost.fixed_per_submission", fixed_per_submission}, {"cost.w1q", w1q},
                          {"cost.w2q", w2q}, {"cost.wmeas", wmeas}}) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError(field, "must be a non-negative number");
  }
  if (!(divisor > 0.0) || !std::isfinite(divisor)) throw ValidationError("cost.divisor", "must be positive");
}

void DeviceModel::validate() const {
  if (n_qubits <= 0) throw ValidationError("n_qubits", "must be positive");
  if (coupling.n_nodes() != n_qubits) {
    throw ValidationError("coupling", "graph has " + std::to_string(coupling.n_nodes()) + " vertices, expected " +
                                          std::to_string(n_qubits));
  }
  check_probability("err_1q", err_1q);
  check_probability("err_2q", err_2q);
  check_probability("err_ro", err_ro);
  if (zone_capacity && *zone_capacity < 1) throw ValidationError("zone_capacity", "must be >= 1");
  if (!(crosstalk.lambda >= 1.0) || !std::isfinite(crosstalk.lambda)) {
    throw ValidationError("crosstalk.lambda", "must be >= 1");
  }
  cost.validate();
}

void NoiseModel::validate() const {
  check_probability("p1q", p1q);
  check_probability("p2q", p2q);
  check_probability("p_ro", p_ro);
  if (!(crosstalk_lambda >= 1.0) || !std::isfinite(crosstalk_lambda)) {
    throw ValidationError("crosstalk_lambda", "must be >= 1");
  }
}

double NoiseModel::two_qubit_probability(bool exposed) const {
  if (exposed && crosstalk_enabled) return std::min(1.0, crosstalk_lambda * p2q);
  return p2q;
}

Graph heavy_hex_27() {
  return Graph::from_edges(27, {{0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
                                {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
                                {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
                                {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}});
}

DeviceModel builtin_device(BuiltinDevice which) {
  DeviceModel d;
  switch (which) {
    case BuiltinDevice::IbmqMumbaiLike:
      d.name = "ibmq_mumbai_like";
      d.technology = Technology::Superconducting;
      d.n_qubits = 27;
      d.coupling = heavy_hex_27();
      d.basis = Basis::Superconducting;
      d.err_1q = 0.0002;
      d.err_2q = 0.045;
      d.err_ro = 0.029;
      d.crosstalk = {true, kDefaultCrosstalkLambda};
      break;
    case BuiltinDevice::H12Like:
      d.name = "h1_2_like";
      d.technology = Technology::TrappedIon;
      d.n_qubits = 12;
      d.coupling = Graph::complete(12);
      d.basis = Basis::TrappedIon;
      d.err_1q = 0.0001;
      d.err_2q = 0.0035;
      d.err_ro = 0.004;
      d.zone_capacity = 3;
      d.crosstalk = {false, 1.0};
      break;
  }
  return d;
}

std::optional<DeviceModel> builtin_device(std::string_view name) {
  if (name == "ibmq_mumbai_like") return builtin_device(BuiltinDevice::IbmqMumbaiLike);
  if (name == "h1_2_like") return builtin_device(BuiltinDevice::H12Like);
  return std::nullopt;
}

DeviceModel load_device(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("device", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("device", "expected a JSON object");
  reject_unknown(doc,
                 {"name", "technology", "n_qubits", "coupling", "basis", "err_1q", "err_2q", "err_ro", "zone_capacity",
                  "crosstalk", "cost"},
                 "");
  DeviceModel d;
  d.name = get_field<std::string>(doc, "name", "");
  const auto tech = get_field<std::string>(doc, "technology", "");
  if (tech == "superconducting") {
    d.technology = Technology::Superconducting;
  } else if (tech == "trappedion") {
    d.technology = Technology::TrappedIon;
  } else {
    throw ValidationError("technology", "unknown technology '" + tech + "'");
  }
  d.n_qubits = get_field<int>(doc, "n_qubits", "");
  if (d.n_qubits <= 0) throw ValidationError("n_qubits", "must be positive");
  try {
    d.basis = parse_basis(get_field<std::string>(doc, "basis", ""));
  } catch (const ValidationError& e) {
    throw ValidationError("basis", e.what());
  }
  d.err_1q = get_field<double>(doc, "err_1q", "");
  d.err_2q = get_field<double>(doc, "err_2q", "");
  d.err_ro = get_field<double>(doc, "err_ro", "");

  if (!doc.contains("coupling")) throw ValidationError("coupling", "missing required field");
  const auto& coupling = doc.at("coupling");
  if (coupling.is_string() && coupling.get<std::string>() == "complete") {
    d.coupling = Graph::complete(d.n_qubits);
  } else if (coupling.is_array()) {
    d.coupling = Graph(d.n_qubits);
    for (const auto& edge : coupling) {
      if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_integer() || !edge[1].is_number_integer()) {
        throw ValidationError("coupling", "edges must be [u, v] integer pairs");
      }
      try {
        d.coupling.add_edge(edge[0].get<int>(), edge[1].get<int>());
      } catch (const ValidationError& e) {
        throw ValidationError("coupling", e.what());
      }
    }
  } else {
    throw ValidationError("coupling", "expected an edge list or \"complete\"");
  }

  if (doc.contains("zone_capacity") && !doc.at("zone_capacity").is_null()) {
    d.zone_capacity = get_field<int>(doc, "zone_capacity", "");
  }
  if (doc.contains("crosstalk")) {
    const auto& xt = doc.at("crosstalk");
    if (!xt.is_object()) throw ValidationError("crosstalk", "expected an object");
    reject_unknown(xt, {"enabled", "lambda"}, "crosstalk.");
    d.crosstalk.enabled = get_field<bool>(xt, "enabled", "crosstalk.");
    d.crosstalk.lambda = xt.contains("lambda") ? get_field<double>(xt, "lambda", "crosstalk.") : 1.0;
  }
  if (doc.contains("cost")) {
    const auto& c = doc.at("cost");
    if (!c.is_object()) throw ValidationError("cost", "expected an object");
    reject_unknown(c, {"fixed_per_submission", "w1q", "w2q", "wmeas", "divisor"}, "cost.");
    auto opt = [&](const char* key, double& slot) {
      if (c.contains(key)) slot = get_field<double>(c, key, "cost.");
    };
    opt("fixed_per_submission", d.cost.fixed_per_submission);
    opt("w1q", d.cost.w1q);
    opt("w2q", d.cost.w2q);
    opt("wmeas", d.cost.wmeas);
    opt("divisor", d.cost.divisor);
  }
  d.validate();
  return d;
}

std::string dump_device(const DeviceModel& d) {
  ordered_json doc;
  doc["name"] = d.name;
  doc["technology"] = technology_name(d.technology);
  doc["n_qubits"] = d.n_qubits;
  doc["basis"] = basis_name(d.basis);
  doc["coupling"] = ordered_json::array();
  for (auto [u, v] : d.coupling.edges()) doc["coupling"].push_back({u, v});
  doc["err_1q"] = d.err_1q;
  doc["err_2q"] = d.err_2q;
  doc["err_ro"] = d.err_ro;
  doc["zone_capacity"] = d.zone_capacity ? ordered_json(*d.zone_capacity) : ordered_json(nullptr);
  doc["crosstalk"] = {{"enabled", d.crosstalk.enabled}, {"lambda", d.crosstalk.lambda}};
  doc["cost"] = {{"fixed_per_submission", d.cost.fixed_per_submission},
                 {"w1q", d.cost.w1q},
                 {"w2q", d.cost.w2q},
                 {"wmeas", d.cost.wmeas},
                 {"divisor", d.cost.divisor}};
  return doc.dump(2) + "\n";
}

DeviceModel resolve_device(const std::string& name_or_path) {
  if (auto builtin = builtin_device(name_or_path)) return *builtin;
  std::ifstream in(name_or_path, std::ios::binary);
  if (!in) {
    throw ValidationError("device", "'" + name_or_path +
                                        "' is neither a builtin device (ibmq_mumbai_like, h1_2_like) nor a readable file");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return load_device(buf.str());
}

NoiseModel derive_noise_model(const DeviceModel& device) {
  NoiseModel n;
  n.p1q = device.err_1q;
  n.p2q = device.err_2q;
  n.p_ro = device.err_ro;
  n.crosstalk_enabled = device.crosstalk.enabled;
  n.crosstalk_lambda = device.crosstalk.enabled ? device.crosstalk.lambda : 1.0;
  return n;
}

GateCounts count_gates(const QuantumCircuit& circuit) {
  GateCounts counts;
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::Measure) {
      ++counts.measure;
    } else if (g.kind == GateKind::Barrier) {
      continue;
    } else if (is_two_qubit(g.kind)) {
      ++counts.two_qubit;
    } else if (g.kind == GateKind::CCX) {
      ++counts.three_qubit;
    } else {
      ++counts.one_qubit;
    }
  }
  return counts;
}

double cost_from_counts(const CostParams& cost, const GateCounts& counts, std::size_t shots) {
  const double variable = cost.w1q * static_cast<double>(counts.one_qubit) +
                          cost.w2q * static_cast<double>(counts.two_qubit) +
                          cost.wmeas * static_cast<double>(counts.measure);
  return cost.fixed_per_submission + static_cast<double>(shots) * variable / cost.divisor;
}

double estimate_cost(const DeviceModel& device, const QuantumCircuit& circuit, std::size_t shots) {
  if (shots == 0) throw ValidationError("shots", "must be >= 1");
  return cost_from_counts(device.cost, count_gates(rebase_to_basis(circuit, device.basis)), shots);
}

}  // namespace qmp
