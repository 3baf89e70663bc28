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
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmp/circuit.hpp"
#include "qmp/device.hpp"
#include "qmp/schedule.hpp"

namespace qmp {

struct BenchmarkEntry {
  int id = 0;
  std::string name;
  std::string file;  // relative to the manifest directory
  int n_qubits = 0;
  int table_gates = 0;  // published gate count, informational
  int table_cx = 0;     // published CX count, informational
  std::string expected;  // expected correct outcome
};

struct BenchmarkManifest {
  std::filesystem::path directory;
  std::vector<BenchmarkEntry> entries;

  static BenchmarkManifest load(const std::filesystem::path& manifest_path);

  const BenchmarkEntry& entry(int id) const;  // throws ValidationError
  QuantumCircuit circuit(int id) const;       // parsed, qubit count checked
};

/// Manifest bundled with the source tree.
std::filesystem::path default_manifest_path();

using BenchmarkPair = std::pair<int, int>;

/// (1,2) (3,4) (5,6) (7,8) (9,1)
std::vector<BenchmarkPair> default_pairing();

struct SuiteOptions {
  std::vector<BenchmarkPair> pairing = default_pairing();
  std::uint64_t shots = 8192;
  std::vector<std::uint64_t> seeds;
  double correct_threshold = 0.4;
  ScheduleWeights weights;
};

/// One program of one pair, measured standalone and inside the merged job.
struct SuiteRecord {
  int pair = 0;
  int slot = 0;
  int benchmark_id = 0;
  std::string benchmark;
  std::vector<std::string> correct;
  std::vector<double> standalone_pst;    // per seed
  std::vector<double> simultaneous_pst;  // per seed
  double standalone_mean = 0.0;
  double simultaneous_mean = 0.0;
  double drop = 0.0;  // standalone_mean - simultaneous_mean

  friend bool operator==(const SuiteRecord&, const SuiteRecord&) = default;
};

struct PairSummary {
  int index = 0;
  std::vector<int> benchmark_ids;
  std::vector<std::vector<int>> merged_embeddings;
  std::vector<std::vector<int>> standalone_embeddings;
  std::vector<double> merged_scores;
  std::size_t merged_duration = 0;
  std::vector<std::size_t> standalone_durations;
  double merged_cost = 0.0;
  std::vector<double> standalone_costs;
  std::size_t merged_exposed_gates = 0;
  std::vector<std::size_t> standalone_exposed_gates;

  friend bool operator==(const PairSummary&, const PairSummary&) = default;
};

struct SuiteAggregate {
  double mean_standalone_pst = 0.0;
  double mean_simultaneous_pst = 0.0;
  double mean_drop = 0.0;          // mean over pairs of the pair-averaged drop (primary)
  double mean_drop_stderr = 0.0;   // standard error of mean_drop across seeds
  std::vector<double> drop_by_seed;
  double mean_relative_drop = 0.0;       // mean of per-record drop / standalone
  double relative_drop_of_means = 0.0;   // 1 - mean_simultaneous / mean_standalone

  friend bool operator==(const SuiteAggregate&, const SuiteAggregate&) = default;
};

struct SavingsSummary {
  double independent = 0.0;
  double merged = 0.0;
  double savings = 0.0;  // 1 - merged / independent

  friend bool operator==(const SavingsSummary&, const SavingsSummary&) = default;
};

struct SuiteProvenance {
  DeviceModel device;
  NoiseModel noise;
  std::uint64_t shots = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<BenchmarkPair> pairing;
  double correct_threshold = 0.4;
  ScheduleWeights weights;
  std::string seed_derivation;

  friend bool operator==(const SuiteProvenance& a, const SuiteProvenance& b) {
    return a.device == b.device && a.noise == b.noise && a.shots == b.shots && a.seeds == b.seeds &&
           a.pairing == b.pairing && a.correct_threshold == b.correct_threshold &&
           a.weights.one_qubit == b.weights.one_qubit && a.weights.two_qubit == b.weights.two_qubit &&
           a.weights.measure == b.weights.measure && a.seed_derivation == b.seed_derivation;
  }
};

inline constexpr double kPublishedSuiteBudgetReduction = 0.31;

struct SuiteReport {
  SuiteProvenance provenance;
  std::vector<SuiteRecord> records;
  std::vector<PairSummary> pairs;
  SuiteAggregate aggregate;
  SavingsSummary cost;
  SavingsSummary runtime;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// Seed of one sampling run: mode 0 is the merged job, 1 + slot a standalone
/// program.
std::uint64_t run_seed(std::uint64_t seed, int pair, int mode);

/// Standalone-vs-simultaneous campaign: every pair is compiled merged and each member
/// standalone on its own best partition, then sampled under `noise` for every
/// seed. Errors are rethrown with the failing pair identified.
SuiteReport run_benchmark_suite(const DeviceModel& device, const NoiseModel& noise, const BenchmarkManifest& manifest,
                                const SuiteOptions& options);

/// Recomputes aggregate, cost and runtime sections from records and pairs.
void finalize_report(SuiteReport& report);

}  // namespace qmp
