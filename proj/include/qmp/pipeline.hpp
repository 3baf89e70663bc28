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
#include <span>
#include <vector>

#include "qmp/allocation.hpp"
#include "qmp/circuit.hpp"
#include "qmp/device.hpp"
#include "qmp/merge.hpp"
#include "qmp/schedule.hpp"

namespace qmp {

/// One device submission: one or more programs compiled into a single
/// physical circuit.
struct CompiledJob {
  QuantumCircuit circuit;                  // merged physical circuit, device basis
  Allocation allocation;
  std::vector<QuantumCircuit> programs;    // per-program physical circuits
  std::vector<CbitRange> cbit_ranges;      // per-program bits in `circuit`
  Schedule schedule;
  GateCounts counts;

  std::size_t exposed_gates() const;
};

/// rebase -> allocate -> route -> merge -> schedule. A single program goes
/// through the same path (its merge is the identity).
CompiledJob compile_job(const DeviceModel& device, std::span<const QuantumCircuit> programs,
                        const ScheduleWeights& weights = {});

}  // namespace qmp
