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

#include "qmp/suite.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qmp/error.hpp"
#include "qmp/metrics.hpp"
#include "qmp/pipeline.hpp"
#include "qmp/qasm.hpp"
#include "qmp/simulator.hpp"

#ifndef QMP_SOURCE_DIR
#define QMP_SOURCE_DIR "."
#endif

namespace qmp {

BenchmarkManifest BenchmarkManifest::load(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw ValidationError("manifest", "cannot open '" + manifest_path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("manifest", std::string("malformed JSON: ") + e.what());
  }
  BenchmarkManifest m;
  m.directory = manifest_path.parent_path();
  try {
    for (const auto& b : doc.at("benchmarks")) {
      BenchmarkEntry e;
      e.id = b.at("id").get<int>();
      e.name = b.at("name").get<std::string>();
      e.file = b.at("file").get<std::string>();
      e.n_qubits = b.at("n_qubits").get<int>();
      e.table_gates = b.value("gates", 0);
      e.table_cx = b.value("cx", 0);
      e.expected = b.value("expected", std::string{});
      m.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("manifest", std::string("schema violation: ") + e.what());
  }
  return m;
}

const BenchmarkEntry& BenchmarkManifest::entry(int id) const {
  for (const auto& e : entries) {
    if (e.id == id) return e;
  }
  throw ValidationError("benchmark", "no benchmark with id " + std::to_string(id) + " in manifest");
}

QuantumCircuit BenchmarkManifest::circuit(int id) const {
  const BenchmarkEntry& e = entry(id);
  QuantumCircuit c = load_qasm_file((directory / e.file).string());
  c.name = e.name;
  if (c.n_qubits != e.n_qubits) {
    throw ValidationError("benchmark", e.name + ": file declares " + std::to_string(c.n_qubits) +
                                           " qubits, manifest says " + std::to_string(e.n_qubits));
  }
  return c;
}

std::filesystem::path default_manifest_path() {
  return std::filesystem::path(QMP_SOURCE_DIR) / "benchmarks" / "manifest.json";
}

std::vector<BenchmarkPair> default_pairing() { return {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 1}}; }

std::uint64_t run_seed(std::uint64_t seed, int pair, int mode) {
  return mix_seed(mix_seed(seed, static_cast<std::uint64_t>(pair)), static_cast<std::uint64_t>(mode));
}

namespace {

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

void run_pair(const DeviceModel& device, const NoiseModel& noise, const BenchmarkManifest& manifest,
              const SuiteOptions& options, int pair_index, SuiteReport& report) {
  const auto [id_a, id_b] = options.pairing[static_cast<std::size_t>(pair_index)];
  const std::vector<QuantumCircuit> programs = {manifest.circuit(id_a), manifest.circuit(id_b)};

  const CompiledJob merged = compile_job(device, programs, options.weights);
  std::vector<CompiledJob> standalone;
  for (const auto& p : programs) standalone.push_back(compile_job(device, std::span(&p, 1), options.weights));

  PairSummary summary;
  summary.index = pair_index;
  summary.benchmark_ids = {id_a, id_b};
  summary.merged_duration = merged.schedule.duration;
  summary.merged_cost = cost_from_counts(device.cost, merged.counts, options.shots);
  summary.merged_exposed_gates = merged.exposed_gates();
  for (const auto& placement : merged.allocation.programs) {
    summary.merged_embeddings.push_back(placement.embedding);
    summary.merged_scores.push_back(placement.score);
  }
  for (const auto& job : standalone) {
    summary.standalone_embeddings.push_back(job.allocation.programs.front().embedding);
    summary.standalone_durations.push_back(job.schedule.duration);
    summary.standalone_costs.push_back(cost_from_counts(device.cost, job.counts, options.shots));
    summary.standalone_exposed_gates.push_back(job.exposed_gates());
  }

  std::vector<SuiteRecord> records(2);
  for (int slot = 0; slot < 2; ++slot) {
    SuiteRecord& r = records[static_cast<std::size_t>(slot)];
    r.pair = pair_index;
    r.slot = slot;
    r.benchmark_id = summary.benchmark_ids[static_cast<std::size_t>(slot)];
    r.benchmark = programs[static_cast<std::size_t>(slot)].name;
    const auto correct = correct_outcomes(programs[static_cast<std::size_t>(slot)], options.correct_threshold);
    r.correct.assign(correct.begin(), correct.end());
  }

  for (std::uint64_t seed : options.seeds) {
    const OutcomeHistogram joint =
        sample_counts(merged.circuit, noise, options.shots, run_seed(seed, pair_index, 0), &merged.schedule);
    const auto parts = split_merged_histogram(joint, merged.cbit_ranges);
    for (int slot = 0; slot < 2; ++slot) {
      SuiteRecord& r = records[static_cast<std::size_t>(slot)];
      const std::set<std::string> correct(r.correct.begin(), r.correct.end());
      const CompiledJob& solo = standalone[static_cast<std::size_t>(slot)];
      const OutcomeHistogram alone =
          sample_counts(solo.circuit, noise, options.shots, run_seed(seed, pair_index, 1 + slot), &solo.schedule);
      r.standalone_pst.push_back(compute_pst(alone, correct));
      r.simultaneous_pst.push_back(compute_pst(parts[static_cast<std::size_t>(slot)], correct));
    }
  }
  for (auto& r : records) report.records.push_back(std::move(r));
  report.pairs.push_back(std::move(summary));
}

}  // namespace

void finalize_report(SuiteReport& report) {
  const std::size_t n_seeds = report.provenance.seeds.size();
  std::vector<double> standalone_means, simultaneous_means, relative;
  for (auto& r : report.records) {
    r.standalone_mean = mean(r.standalone_pst);
    r.simultaneous_mean = mean(r.simultaneous_pst);
    r.drop = r.standalone_mean - r.simultaneous_mean;
    standalone_means.push_back(r.standalone_mean);
    simultaneous_means.push_back(r.simultaneous_mean);
    if (r.standalone_mean > 0.0) relative.push_back(r.drop / r.standalone_mean);
  }

  SuiteAggregate& agg = report.aggregate;
  agg = {};
  agg.mean_standalone_pst = mean(standalone_means);
  agg.mean_simultaneous_pst = mean(simultaneous_means);
  agg.mean_relative_drop = mean(relative);
  agg.relative_drop_of_means =
      agg.mean_standalone_pst > 0.0 ? 1.0 - agg.mean_simultaneous_pst / agg.mean_standalone_pst : 0.0;

  // Pair-averaged drop per seed, then mean over pairs.
  const std::size_t n_pairs = report.pairs.size();
  agg.drop_by_seed.assign(n_seeds, 0.0);
  std::vector<double> pair_drops(n_pairs, 0.0);
  std::vector<std::size_t> members(n_pairs, 0);
  for (const auto& r : report.records) {
    const auto p = static_cast<std::size_t>(r.pair);
    pair_drops[p] += r.drop;
    ++members[p];
    for (std::size_t s = 0; s < n_seeds && s < r.standalone_pst.size(); ++s) {
      agg.drop_by_seed[s] += (r.standalone_pst[s] - r.simultaneous_pst[s]) / 2.0 / static_cast<double>(n_pairs);
    }
  }
  for (std::size_t p = 0; p < n_pairs; ++p) {
    if (members[p] > 0) pair_drops[p] /= static_cast<double>(members[p]);
  }
  agg.mean_drop = mean(pair_drops);
  if (n_seeds > 1) {
    const double m = mean(agg.drop_by_seed);
    double ss = 0.0;
    for (double d : agg.drop_by_seed) ss += (d - m) * (d - m);
    agg.mean_drop_stderr = std::sqrt(ss / static_cast<double>(n_seeds - 1)) / std::sqrt(static_cast<double>(n_seeds));
  }

  report.cost = {};
  report.runtime = {};
  for (const auto& p : report.pairs) {
    report.cost.merged += p.merged_cost;
    for (double c : p.standalone_costs) report.cost.independent += c;
    report.runtime.merged += static_cast<double>(p.merged_duration);
    for (std::size_t d : p.standalone_durations) report.runtime.independent += static_cast<double>(d);
  }
  report.cost.savings = report.cost.independent > 0.0 ? 1.0 - report.cost.merged / report.cost.independent : 0.0;
  report.runtime.savings =
      report.runtime.independent > 0.0 ? 1.0 - report.runtime.merged / report.runtime.independent : 0.0;
}

SuiteReport run_benchmark_suite(const DeviceModel& device, const NoiseModel& noise, const BenchmarkManifest& manifest,
                                const SuiteOptions& options) {
  if (options.shots == 0) throw ValidationError("shots", "must be >= 1");
  if (options.seeds.empty()) throw ValidationError("seeds", "seed list must be non-empty");
  if (options.pairing.empty()) throw ValidationError("pairing", "no benchmark pairs");

  SuiteReport report;
  report.provenance.device = device;
  report.provenance.noise = noise;
  report.provenance.shots = options.shots;
  report.provenance.seeds = options.seeds;
  report.provenance.pairing = options.pairing;
  report.provenance.correct_threshold = options.correct_threshold;
  report.provenance.weights = options.weights;
  report.provenance.seed_derivation = "mix_seed(mix_seed(seed, pair), mode); mode 0 merged, 1 + slot standalone";

  for (std::size_t i = 0; i < options.pairing.size(); ++i) {
    const auto [a, b] = options.pairing[i];
    try {
      run_pair(device, noise, manifest, options, static_cast<int>(i), report);
    } catch (const Error& e) {
      throw Error("pair " + std::to_string(i) + " (" + std::to_string(a) + ", " + std::to_string(b) + "): " + e.what());
    }
  }
  finalize_report(report);
  return report;
}

}  // namespace qmp
