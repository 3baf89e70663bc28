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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qmp/error.hpp"
#include "qmp/pipeline.hpp"
#include "qmp/schedule.hpp"
#include "qmp/suite.hpp"

using namespace qmp;

namespace {

QuantumCircuit four_cx(int n) {
  QuantumCircuit c(n, 0);
  c.add(Gate::cx(0, 1)).add(Gate::cx(2, 3)).add(Gate::cx(4, 5)).add(Gate::cx(6, 7));
  return c;
}

void expect_legal(const QuantumCircuit& c, const Schedule& s, std::size_t cap) {
  for (const auto& slice : s.slices) {
    std::set<int> used;
    std::size_t two = 0;
    for (std::size_t i : slice) {
      for (int q : c.gates[i].qubits) EXPECT_TRUE(used.insert(q).second);
      two += c.gates[i].qubits.size() >= 2;
    }
    if (cap) EXPECT_LE(two, cap);
  }
  // Per-qubit order follows gate order.
  std::vector<std::size_t> last_end(static_cast<std::size_t>(c.n_qubits), 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    for (int q : c.gates[i].qubits) {
      EXPECT_GE(s.start[i], last_end[static_cast<std::size_t>(q)]);
      last_end[static_cast<std::size_t>(q)] = s.start[i] + s.length[i];
    }
  }
}

}  // namespace

TEST(Schedule, ZoneCapDefersTheFourthGate) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  const QuantumCircuit c = four_cx(12);
  const Schedule s = schedule_circuit(c, d);
  EXPECT_EQ(s.start, (std::vector<std::size_t>{0, 0, 0, 2}));
  EXPECT_EQ(s.two_qubit_per_slice[0], 3u);
  EXPECT_EQ(s.duration, 4u);
  expect_legal(c, s, 3);
}

TEST(Schedule, HeavyHexRunsDisjointGatesTogether) {
  const DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  QuantumCircuit c(27, 0);
  // Four disjoint coupled pairs.
  c.add(Gate::cx(0, 1)).add(Gate::cx(2, 3)).add(Gate::cx(4, 7)).add(Gate::cx(5, 8));
  const Schedule s = schedule_circuit(c, d);
  EXPECT_EQ(s.start, (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_EQ(s.duration, 2u);
  EXPECT_EQ(s.two_qubit_per_slice[0], 4u);
}

TEST(Schedule, SerialChainTakesFourSlices) {
  const DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  QuantumCircuit c(3, 0);
  c.add(Gate::cx(0, 1)).add(Gate::cx(1, 2));
  EXPECT_EQ(schedule_circuit(c, d).duration, 4u);
}

TEST(Schedule, WeightsAreConfigurable) {
  const DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  QuantumCircuit c(2, 1);
  c.add(Gate::h(0)).add(Gate::cx(0, 1)).add(Gate::measure(1, 0));
  EXPECT_EQ(schedule_circuit(c, d).duration, 4u);
  EXPECT_EQ(schedule_circuit(c, d, ScheduleWeights{2, 5, 3}).duration, 10u);
}

TEST(Schedule, BarrierSynchronisesWithoutTakingTime) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  QuantumCircuit c(2, 0);
  c.add(Gate::cx(0, 1)).add(Gate::barrier({0, 1})).add(Gate::h(0));
  const Schedule s = schedule_circuit(c, d);
  EXPECT_EQ(s.length[1], 0u);
  EXPECT_EQ(s.start[2], 2u);
  EXPECT_EQ(s.duration, 3u);
}

TEST(Schedule, CrosstalkExposureNeedsAnAdjacentCoupler) {
  const DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  QuantumCircuit c(27, 0);
  // (0,1) and (2,3) are joined by edge 1-2; (21,23) is far away.
  c.add(Gate::cx(0, 1)).add(Gate::cx(2, 3)).add(Gate::cx(21, 23));
  const Schedule s = schedule_circuit(c, d);
  EXPECT_EQ(s.crosstalk_exposed, (std::vector<bool>{true, true, false}));

  QuantumCircuit apart(27, 0);
  apart.add(Gate::cx(0, 1)).add(Gate::h(3)).add(Gate::h(3)).add(Gate::cx(2, 3));
  const Schedule t = schedule_circuit(apart, d);
  EXPECT_FALSE(t.crosstalk_exposed[0]);
  EXPECT_FALSE(t.crosstalk_exposed[3]);
}

TEST(Schedule, RejectsCircuitWiderThanDevice) {
  EXPECT_THROW(schedule_circuit(QuantumCircuit(13, 0), builtin_device(BuiltinDevice::H12Like)), ValidationError);
}

TEST(Schedule, RandomCircuitsStayLegal) {
  std::mt19937_64 rng(11);
  for (auto which : {BuiltinDevice::H12Like, BuiltinDevice::IbmqMumbaiLike}) {
    const DeviceModel d = builtin_device(which);
    const auto& edges = d.coupling.edges();
    std::uniform_int_distribution<std::size_t> edge(0, edges.size() - 1);
    std::uniform_int_distribution<int> qubit(0, d.n_qubits - 1), coin(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
      QuantumCircuit c(d.n_qubits, 0);
      for (int g = 0; g < 30; ++g) {
        if (coin(rng) == 0) {
          c.add(Gate::sx(qubit(rng)));
        } else {
          const auto [a, b] = edges[edge(rng)];
          c.add(Gate::cx(a, b));
        }
      }
      const Schedule s = schedule_circuit(c, d);
      expect_legal(c, s, d.zone_capacity.value_or(0));
      EXPECT_EQ(schedule_circuit(c, d).start, s.start);
    }
  }
}

TEST(Schedule, MergedDurationNeverExceedsStandaloneSum) {
  const auto manifest = BenchmarkManifest::load(default_manifest_path());
  for (auto which : {BuiltinDevice::H12Like, BuiltinDevice::IbmqMumbaiLike}) {
    const DeviceModel d = builtin_device(which);
    for (const auto& [x, y] : default_pairing()) {
      const std::vector<QuantumCircuit> pair{manifest.circuit(x), manifest.circuit(y)};
      const CompiledJob merged = compile_job(d, pair);
      std::size_t sum = 0;
      for (const auto& c : pair) sum += compile_job(d, std::span(&c, 1)).schedule.duration;
      EXPECT_LE(merged.schedule.duration, sum) << d.name << " " << x << "+" << y;
      expect_legal(merged.circuit, merged.schedule, d.zone_capacity.value_or(0));
    }
  }
}
