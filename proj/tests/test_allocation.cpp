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

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "qmp/allocation.hpp"
#include "qmp/error.hpp"
#include "qmp/rebase.hpp"
#include "qmp/suite.hpp"

using namespace qmp;

namespace {

bool induces_connected(const Graph& g, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  const std::set<int> in(nodes.begin(), nodes.end());
  std::set<int> seen{nodes[0]};
  std::queue<int> q;
  q.push(nodes[0]);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (in.count(v) && seen.insert(v).second) q.push(v);
    }
  }
  return seen.size() == in.size();
}

// Every k-subset of the nodes, connected ones kept, in lexicographic order.
std::vector<std::vector<int>> brute_force_subsets(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int n = g.n_nodes();
  while (true) {
    if (induces_connected(g, pick)) out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

DeviceModel path_device(int n, double e1 = 0.01, double e2 = 0.05, double ero = 0.02) {
  DeviceModel d;
  d.name = "path";
  d.n_qubits = n;
  d.coupling = Graph(n);
  for (int i = 0; i + 1 < n; ++i) d.coupling.add_edge(i, i + 1);
  d.err_1q = e1;
  d.err_2q = e2;
  d.err_ro = ero;
  return d;
}

// Counts gates of an already-rebased circuit by walking the gate list.
double formula_score(const DeviceModel& d, const QuantumCircuit& rebased, std::size_t swaps) {
  double n1 = 0, n2 = 0, nm = 0;
  for (const auto& g : rebased.gates) {
    if (g.kind == GateKind::Measure) {
      ++nm;
    } else if (g.qubits.size() == 1 && g.kind != GateKind::Barrier) {
      ++n1;
    } else if (g.qubits.size() == 2) {
      ++n2;
    }
  }
  return std::pow(1 - d.err_1q, n1) * std::pow(1 - d.err_2q, n2 + 3.0 * static_cast<double>(swaps)) *
         std::pow(1 - d.err_ro, nm);
}

}  // namespace

TEST(EnumerateSubsets, PathGraph) {
  const DeviceModel d = path_device(4);
  const std::vector<std::vector<int>> expected{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(enumerate_connected_subsets(d.coupling, 2), expected);
}

TEST(EnumerateSubsets, MatchesBruteForceOnHeavyHex) {
  const Graph g = heavy_hex_27();
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(enumerate_connected_subsets(g, k), brute_force_subsets(g, k)) << k;
}

TEST(EnumerateSubsets, RespectsAvailability) {
  const Graph g = heavy_hex_27();
  std::vector<bool> avail(27, true);
  avail[1] = false;
  for (const auto& s : enumerate_connected_subsets(g, 3, avail)) {
    EXPECT_EQ(std::count(s.begin(), s.end(), 1), 0);
    EXPECT_TRUE(induces_connected(g, s));
  }
}

TEST(ScorePartition, NoiselessDeviceScoresOne) {
  DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  d.err_1q = d.err_2q = d.err_ro = 0.0;
  const std::vector<int> subset{0, 1, 2};
  EXPECT_DOUBLE_EQ(score_partition(d, subset, generate_bv("11")), 1.0);
}

TEST(ScorePartition, Bv3OnCompleteGraphMatchesFormula) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  const QuantumCircuit bv = generate_bv("11");
  const QuantumCircuit rebased = rebase_to_basis(bv, d.basis);
  const std::vector<int> a{0, 1, 2}, b{4, 7, 11};
  EXPECT_NEAR(score_partition(d, a, bv), formula_score(d, rebased, 0), 1e-15);
  EXPECT_DOUBLE_EQ(score_partition(d, a, bv), score_partition(d, b, bv));
}

TEST(ScorePartition, SwapsPenaliseNonNativeLayouts) {
  const DeviceModel d = path_device(3);
  QuantumCircuit c(3, 0);
  c.add(Gate::cx(0, 1)).add(Gate::cx(1, 2)).add(Gate::cx(0, 2));
  const std::vector<int> subset{0, 1, 2};
  const PartitionChoice choice = evaluate_partition(d, subset, c);
  EXPECT_EQ(choice.swaps, 1u);
  EXPECT_NEAR(choice.score, formula_score(d, c, 1), 1e-15);
  EXPECT_NEAR(score_partition(d, subset, c), choice.score, 1e-15);
}

TEST(ScorePartition, PermutationSearchFindsSwapFreeEmbedding) {
  // Star interaction around logical 2 fits the path only with 2 in the middle.
  const DeviceModel d = path_device(3);
  QuantumCircuit c(3, 0);
  c.add(Gate::cx(0, 2)).add(Gate::cx(1, 2));
  const std::vector<int> subset{0, 1, 2};
  const PartitionChoice choice = evaluate_partition(d, subset, c);
  EXPECT_EQ(choice.swaps, 0u);
  EXPECT_EQ(choice.embedding[2], 1);
}

TEST(ScorePartition, Errors) {
  const DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  const QuantumCircuit bv = generate_bv("11");
  const std::vector<int> too_small{0, 1};
  const std::vector<int> disconnected{0, 1, 5};
  EXPECT_THROW(score_partition(d, too_small, bv), ValidationError);
  EXPECT_THROW(score_partition(d, disconnected, bv), ValidationError);
}

TEST(ScoreCandidates, ParallelMatchesSerial) {
  const DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  const auto manifest = BenchmarkManifest::load(default_manifest_path());
  const QuantumCircuit c = rebase_to_basis(manifest.circuit(6), d.basis);
  const auto candidates = enumerate_connected_subsets(d.coupling, c.n_qubits);
  const auto par = score_candidates(d, candidates, c);
  const auto ser = score_candidates_serial(d, candidates, c);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].embedding, ser[i].embedding);
    EXPECT_EQ(par[i].score, ser[i].score);
  }
}

TEST(Allocate, TwoTriplesOnCompleteGraph) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  const std::vector<QuantumCircuit> progs{generate_bv("11"), generate_bv("11")};
  const Allocation a = allocate_partitions(d, progs);
  ASSERT_EQ(a.programs.size(), 2u);
  EXPECT_EQ(a.device, "h1_2_like");
  std::set<int> used;
  for (const auto& p : a.programs) used.insert(p.embedding.begin(), p.embedding.end());
  EXPECT_EQ(used.size(), 6u);
  const std::vector<int> first{0, 1, 2};
  EXPECT_DOUBLE_EQ(a.programs[0].score, score_partition(d, first, progs[0]));
  EXPECT_DOUBLE_EQ(a.programs[1].score, a.programs[0].score);
  EXPECT_NO_THROW(check_allocation(d, a, progs));
}

TEST(Allocate, HigherCxProgramChoosesFirst) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  const std::vector<QuantumCircuit> progs{generate_bv("1"), generate_bv("111")};
  const Allocation a = allocate_partitions(d, progs);
  // BV4 (3 CX) is placed first and takes the lexicographically smallest quad.
  std::vector<int> second = a.programs[1].embedding;
  std::sort(second.begin(), second.end());
  EXPECT_EQ(second, (std::vector<int>{0, 1, 2, 3}));
  std::vector<int> first = a.programs[0].embedding;
  std::sort(first.begin(), first.end());
  EXPECT_EQ(first, (std::vector<int>{4, 5}));
}

TEST(Allocate, InsufficientQubits) {
  const DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  const std::vector<QuantumCircuit> progs{QuantumCircuit(27, 0), QuantumCircuit(1, 0)};
  EXPECT_THROW(allocate_partitions(d, progs), AllocationError);
}

TEST(Allocate, NoConnectedSubsetLeft) {
  // Path 0-1-2-3-4: a 2-qubit program at the smallest subset {0,1} leaves
  // {2,3,4}, so a second 4-qubit program cannot fit.
  const DeviceModel d = path_device(5);
  QuantumCircuit a(2, 0), b(4, 0);
  a.add(Gate::cx(0, 1)).add(Gate::cx(0, 1));
  b.add(Gate::cx(0, 1));
  const std::vector<QuantumCircuit> progs{a, b};
  EXPECT_THROW(allocate_partitions(d, progs), AllocationError);
}

TEST(Allocate, SuitePairsOnHeavyHexAreDisjointAndConnected) {
  const DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  const auto manifest = BenchmarkManifest::load(default_manifest_path());
  for (const auto& [x, y] : default_pairing()) {
    const std::vector<QuantumCircuit> progs{rebase_to_basis(manifest.circuit(x), d.basis),
                                            rebase_to_basis(manifest.circuit(y), d.basis)};
    const Allocation a = allocate_partitions(d, progs);
    std::set<int> used;
    std::size_t total = 0;
    for (std::size_t i = 0; i < progs.size(); ++i) {
      const auto& e = a.programs[i].embedding;
      EXPECT_EQ(e.size(), static_cast<std::size_t>(progs[i].n_qubits));
      EXPECT_TRUE(induces_connected(d.coupling, e));
      EXPECT_GT(a.programs[i].score, 0.0);
      EXPECT_LE(a.programs[i].score, 1.0);
      used.insert(e.begin(), e.end());
      total += e.size();
    }
    EXPECT_EQ(used.size(), total) << x << "+" << y;
    EXPECT_NO_THROW(check_allocation(d, a, progs));
    EXPECT_EQ(allocate_partitions(d, progs), a);
  }
}

TEST(CheckAllocation, RejectsOverlapAndDisconnection) {
  const DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  const std::vector<QuantumCircuit> progs{generate_bv("1"), generate_bv("1")};
  Allocation a;
  a.device = d.name;
  a.programs = {{"a", {0, 1}, 0, 1.0}, {"b", {1, 2}, 0, 1.0}};
  EXPECT_THROW(check_allocation(d, a, progs), ValidationError);
  a.programs[1].embedding = {0, 5};
  EXPECT_THROW(check_allocation(d, a, progs), ValidationError);
  a.programs[1].embedding = {3, 5};
  EXPECT_NO_THROW(check_allocation(d, a, progs));
}
