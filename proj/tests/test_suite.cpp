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

#include <cmath>

#include "qmp/error.hpp"
#include "qmp/pipeline.hpp"
#include "qmp/suite.hpp"

using namespace qmp;

namespace {

const BenchmarkManifest& manifest() {
  static const BenchmarkManifest m = BenchmarkManifest::load(default_manifest_path());
  return m;
}

SuiteOptions small_options() {
  SuiteOptions o;
  o.shots = 500;
  o.seeds = {1, 2, 3};
  return o;
}

}  // namespace

TEST(Manifest, EntriesMatchTheirFiles) {
  const auto& m = manifest();
  ASSERT_EQ(m.entries.size(), 9u);
  for (int id = 1; id <= 9; ++id) {
    const auto& e = m.entry(id);
    const CircuitStats s = circuit_stats(m.circuit(id));
    EXPECT_EQ(s.n_qubits, e.n_qubits) << e.name;
    EXPECT_EQ(static_cast<int>(s.total_gates), e.table_gates) << e.name;
    EXPECT_EQ(static_cast<int>(s.cx_count), e.table_cx) << e.name;
    EXPECT_EQ(e.expected.size(), static_cast<std::size_t>(m.circuit(id).n_cbits));
  }
  EXPECT_THROW(m.entry(10), ValidationError);
}

TEST(Suite, ZeroNoiseGivesPerfectPst) {
  DeviceModel d = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  d.err_1q = d.err_2q = d.err_ro = 0.0;
  const SuiteReport r = run_benchmark_suite(d, derive_noise_model(d), manifest(), small_options());
  ASSERT_EQ(r.records.size(), 10u);
  for (const auto& rec : r.records) {
    for (double p : rec.standalone_pst) EXPECT_EQ(p, 1.0);
    for (double p : rec.simultaneous_pst) EXPECT_EQ(p, 1.0);
    EXPECT_EQ(rec.drop, 0.0);
  }
  EXPECT_EQ(r.aggregate.mean_drop, 0.0);
}

TEST(Suite, ReportIsConsistentAndReproducible) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  const SuiteReport r = run_benchmark_suite(d, derive_noise_model(d), manifest(), small_options());
  ASSERT_EQ(r.pairs.size(), 5u);
  double independent_cost = 0.0, merged_cost = 0.0, independent_time = 0.0, merged_time = 0.0;
  for (const auto& p : r.pairs) {
    merged_cost += p.merged_cost;
    merged_time += static_cast<double>(p.merged_duration);
    for (double c : p.standalone_costs) independent_cost += c;
    for (std::size_t t : p.standalone_durations) independent_time += static_cast<double>(t);
    EXPECT_LE(p.merged_cost, p.standalone_costs[0] + p.standalone_costs[1]);
    EXPECT_LE(p.merged_duration, p.standalone_durations[0] + p.standalone_durations[1]);
  }
  EXPECT_DOUBLE_EQ(r.cost.savings, 1.0 - merged_cost / independent_cost);
  EXPECT_DOUBLE_EQ(r.runtime.savings, 1.0 - merged_time / independent_time);
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.standalone_pst.size(), 3u);
    for (double p : rec.simultaneous_pst) {
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
    }
    EXPECT_EQ(rec.correct.size(), 1u);
    EXPECT_EQ(rec.correct[0], manifest().entry(rec.benchmark_id).expected);
  }
  double drop = 0.0;
  for (const auto& rec : r.records) drop += rec.drop;
  EXPECT_NEAR(r.aggregate.mean_drop, drop / 10.0, 1e-15);
  EXPECT_EQ(run_benchmark_suite(d, derive_noise_model(d), manifest(), small_options()), r);

  SuiteReport copy = r;
  copy.aggregate = {};
  copy.cost = {};
  finalize_report(copy);
  EXPECT_EQ(copy, r);
}

TEST(Suite, RunSeedsAreDistinctPerMode) {
  std::set<std::uint64_t> seen;
  for (int pair = 0; pair < 5; ++pair) {
    for (int mode = 0; mode < 3; ++mode) seen.insert(run_seed(1, pair, mode));
  }
  EXPECT_EQ(seen.size(), 15u);
}

TEST(Suite, Errors) {
  const DeviceModel d = builtin_device(BuiltinDevice::H12Like);
  SuiteOptions o = small_options();
  o.seeds.clear();
  EXPECT_THROW(run_benchmark_suite(d, derive_noise_model(d), manifest(), o), ValidationError);
  o = small_options();
  o.shots = 0;
  EXPECT_THROW(run_benchmark_suite(d, derive_noise_model(d), manifest(), o), ValidationError);
  o = small_options();
  o.pairing = {{1, 2}, {3, 42}};
  try {
    run_benchmark_suite(d, derive_noise_model(d), manifest(), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("pair 1 (3, 42)"), std::string::npos) << e.what();
  }
}
