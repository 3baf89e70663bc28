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

#include "qmp/pipeline.hpp"

#include <algorithm>

#include "qmp/rebase.hpp"
#include "qmp/routing.hpp"

namespace qmp {

std::size_t CompiledJob::exposed_gates() const {
  return static_cast<std::size_t>(std::count(schedule.crosstalk_exposed.begin(), schedule.crosstalk_exposed.end(), true));
}

CompiledJob compile_job(const DeviceModel& device, std::span<const QuantumCircuit> programs,
                        const ScheduleWeights& weights) {
  std::vector<QuantumCircuit> rebased;
  rebased.reserve(programs.size());
  for (const auto& p : programs) rebased.push_back(rebase_to_basis(p, device.basis));

  CompiledJob job;
  job.allocation = allocate_partitions(device, rebased);
  for (std::size_t i = 0; i < rebased.size(); ++i) {
    RoutedCircuit routed = route_to_partition(rebased[i], job.allocation.programs[i].embedding, device);
    // Inserted SWAPs are CX triples; bring them into the native basis.
    job.programs.push_back(rebase_to_basis(routed.circuit, device.basis));
  }
  job.circuit = merge_programs(job.programs, device);
  job.cbit_ranges = merged_cbit_ranges(job.programs);
  job.schedule = schedule_circuit(job.circuit, device, weights);
  job.counts = count_gates(job.circuit);
  return job;
}

}  // namespace qmp
