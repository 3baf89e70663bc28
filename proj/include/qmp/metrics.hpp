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

#include <set>
#include <string>
#include <vector>

#include "qmp/circuit.hpp"
#include "qmp/merge.hpp"
#include "qmp/simulator.hpp"

namespace qmp {

inline constexpr double kDefaultCorrectThreshold = 0.4;

/// Outcomes whose ideal probability is at least `threshold`. Throws
/// ValidationError when none qualifies (the circuit needs an explicit
/// correct-set override).
std::set<std::string> correct_outcomes(const QuantumCircuit& circuit, double threshold = kDefaultCorrectThreshold);

/// Probability of successful trials: counts landing in `correct` / shots.
double compute_pst(const OutcomeHistogram& hist, const std::set<std::string>& correct);

/// Marginal histograms over each classical-bit range. Ranges must tile
/// [0, n_bits) without overlap or gaps (any order).
std::vector<OutcomeHistogram> split_merged_histogram(const OutcomeHistogram& hist, const std::vector<CbitRange>& ranges);

/// Most frequent outcome; ties go to the lexicographically smallest key.
std::string modal_outcome(const OutcomeHistogram& hist);

}  // namespace qmp
