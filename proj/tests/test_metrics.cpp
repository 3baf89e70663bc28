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

#include "oracle.hpp"
#include "qmp/error.hpp"
#include "qmp/merge.hpp"
#include "qmp/metrics.hpp"
#include "qmp/routing.hpp"
#include "qmp/simulator.hpp"
#include "qmp/suite.hpp"

using namespace qmp;

namespace {

OutcomeHistogram hist(int n_bits, std::map<std::string, std::uint64_t> counts) {
  OutcomeHistogram h;
  h.n_bits = n_bits;
  for (const auto& [k, v] : counts) h.shots += v;
  h.counts = std::move(counts);
  return h;
}

}  // namespace

TEST(CorrectOutcomes, Benchmarks) {
  EXPECT_EQ(correct_outcomes(generate_bv("11")), (std::set<std::string>{"11"}));
  const auto manifest = BenchmarkManifest::load(default_manifest_path());
  for (const auto& e : manifest.entries) {
    const auto c = manifest.circuit(e.id);
    const auto ideal = oracle::distribution(c);
    std::set<std::string> expected;
    for (const auto& [k, p] : ideal) {
      if (p > 0.5) expected.insert(k);
    }
    EXPECT_EQ(correct_outcomes(c), expected) << e.name;
    EXPECT_EQ(expected, std::set<std::string>{e.expected});
  }
}

TEST(CorrectOutcomes, ThresholdRules) {
  QuantumCircuit coin(1, 1);
  coin.add(Gate::h(0)).add(Gate::measure(0, 0));
  EXPECT_EQ(correct_outcomes(coin), (std::set<std::string>{"0", "1"}));
  EXPECT_THROW(correct_outcomes(coin, 0.6), ValidationError);
}

TEST(CorrectOutcomes, ThreeWayUniformCircuitHasNone) {
  // Ry(2 acos(1/sqrt3)) then controlled-H style spread gives 1/3 each on
  // 00, 10, 11. Built from native gates: Rx/Rz rotations and CX.
  QuantumCircuit c(2, 2);
  const double t = 2.0 * std::acos(1.0 / std::sqrt(3.0));
  c.add(Gate::u1q(0, t, oracle::kPi / 2));  // Ry(t)
  // Controlled-H on qubit 1 from qubit 0: Ry(pi/4) CX Ry(-pi/4)
  c.add(Gate::u1q(1, oracle::kPi / 4, oracle::kPi / 2)).add(Gate::cx(0, 1)).add(Gate::u1q(1, -oracle::kPi / 4, oracle::kPi / 2));
  c.add(Gate::measure(0, 0)).add(Gate::measure(1, 1));
  const auto ideal = oracle::distribution(c);
  ASSERT_EQ(ideal.size(), 3u);
  for (const auto& [k, p] : ideal) EXPECT_NEAR(p, 1.0 / 3.0, 1e-12) << k;
  EXPECT_THROW(correct_outcomes(c), ValidationError);
}

TEST(Pst, Examples) {
  EXPECT_DOUBLE_EQ(compute_pst(hist(2, {{"11", 8192}}), {"11"}), 1.0);
  EXPECT_DOUBLE_EQ(compute_pst(hist(2, {{"11", 50}, {"00", 50}}), {"11"}), 0.5);
  EXPECT_DOUBLE_EQ(compute_pst(hist(4, {{"0101", 30}, {"1010", 20}, {"0000", 50}}), {"0101", "1010"}), 0.5);
  EXPECT_THROW(compute_pst(hist(2, {{"11", 1}}), {"111"}), ValidationError);
  EXPECT_THROW(compute_pst(hist(2, {{"11", 1}}), {}), ValidationError);
}

TEST(Split, MarginalsConserveShots) {
  const auto parts = split_merged_histogram(hist(4, {{"1111", 100}}), {{0, 2}, {2, 4}});
  ASSERT_EQ(parts.size(), 2u);
  for (const auto& p : parts) {
    EXPECT_EQ(p.shots, 100u);
    EXPECT_EQ(p.count("11"), 100u);
    EXPECT_EQ(p.n_bits, 2);
  }
  const auto mixed = split_merged_histogram(hist(3, {{"101", 7}, {"011", 3}}), {{2, 3}, {0, 2}});
  EXPECT_EQ(mixed[0].count("1"), 10u);
  EXPECT_EQ(mixed[1].count("10"), 7u);
  EXPECT_EQ(mixed[1].count("01"), 3u);
}

TEST(Split, RangeErrors) {
  const auto h = hist(4, {{"0000", 1}});
  EXPECT_THROW(split_merged_histogram(h, {{0, 3}, {2, 4}}), ValidationError);
  EXPECT_THROW(split_merged_histogram(h, {{0, 1}, {2, 4}}), ValidationError);
  EXPECT_THROW(split_merged_histogram(h, {{0, 5}}), ValidationError);
}

TEST(Split, SampledProductMarginalsMatchIdeals) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  QuantumCircuit a(2, 2), b(1, 1);
  a.add(Gate::h(0)).add(Gate::cx(0, 1)).add(Gate::measure(0, 0)).add(Gate::measure(1, 1));
  b.add(Gate::rx(0, 1.0)).add(Gate::measure(0, 0));
  const std::vector<QuantumCircuit> progs{route_to_partition(a, std::vector<int>{0, 1}, d).circuit,
                                          route_to_partition(b, std::vector<int>{5}, d).circuit};
  const QuantumCircuit merged = merge_programs(progs, d);
  const std::uint64_t shots = 20000;
  const auto parts = split_merged_histogram(sample_counts(merged, NoiseModel{}, shots, 9), merged_cbit_ranges(progs));
  for (std::size_t i = 0; i < 2; ++i) {
    const QuantumCircuit& src = i == 0 ? a : b;
    for (const auto& [bits, p] : oracle::distribution(src)) {
      const double f = static_cast<double>(parts[i].count(bits)) / static_cast<double>(shots);
      EXPECT_NEAR(f, p, 4.0 * oracle::binomial_sigma(p, static_cast<double>(shots))) << bits;
    }
  }
}

TEST(Modal, TieGoesToSmallestKey) {
  EXPECT_EQ(modal_outcome(hist(2, {{"10", 5}, {"01", 5}, {"00", 1}})), "01");
  EXPECT_EQ(modal_outcome(hist(2, {{"10", 6}, {"01", 5}})), "10");
}
