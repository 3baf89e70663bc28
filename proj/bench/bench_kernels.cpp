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

// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "qmp/allocation.hpp"
#include "qmp/pipeline.hpp"
#include "qmp/rebase.hpp"
#include "qmp/simulator.hpp"
#include "qmp/suite.hpp"

using namespace qmp;

namespace {

const CompiledJob& merged_job() {
  static const CompiledJob job = [] {
    const auto m = BenchmarkManifest::load(default_manifest_path());
    const std::vector<QuantumCircuit> pair{m.circuit(7), m.circuit(8)};
    return compile_job(builtin_device(BuiltinDevice::IbmqMumbaiLike), pair);
  }();
  return job;
}

void BM_SampleCounts(benchmark::State& state) {
  const CompiledJob& job = merged_job();
  const NoiseModel n = derive_noise_model(builtin_device(BuiltinDevice::IbmqMumbaiLike));
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_counts(job.circuit, n, shots, 1, &job.schedule));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleCountsSerial(benchmark::State& state) {
  const CompiledJob& job = merged_job();
  const NoiseModel n = derive_noise_model(builtin_device(BuiltinDevice::IbmqMumbaiLike));
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_counts_serial(job.circuit, n, shots, 1, &job.schedule));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct ScoringInput {
  DeviceModel device = builtin_device(BuiltinDevice::IbmqMumbaiLike);
  QuantumCircuit circuit;
  std::vector<std::vector<int>> candidates;
};

const ScoringInput& scoring_input() {
  static const ScoringInput in = [] {
    ScoringInput s;
    const auto m = BenchmarkManifest::load(default_manifest_path());
    s.circuit = rebase_to_basis(m.circuit(8), s.device.basis);
    s.candidates = enumerate_connected_subsets(s.device.coupling, s.circuit.n_qubits);
    return s;
  }();
  return in;
}

void BM_ScoreCandidates(benchmark::State& state) {
  const ScoringInput& in = scoring_input();
  for (auto _ : state) benchmark::DoNotOptimize(score_candidates(in.device, in.candidates, in.circuit));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(in.candidates.size()));
}

void BM_ScoreCandidatesSerial(benchmark::State& state) {
  const ScoringInput& in = scoring_input();
  for (auto _ : state) benchmark::DoNotOptimize(score_candidates_serial(in.device, in.candidates, in.circuit));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(in.candidates.size()));
}

}  // namespace

BENCHMARK(BM_SampleCounts)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleCountsSerial)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreCandidates)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreCandidatesSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
