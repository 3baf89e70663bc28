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

#include "qmp/metrics.hpp"

#include <algorithm>

#include "qmp/error.hpp"

namespace qmp {

std::set<std::string> correct_outcomes(const QuantumCircuit& circuit, double threshold) {
  const Distribution d = ideal_distribution(circuit);
  std::set<std::string> out;
  for (const auto& [bits, p] : d.probabilities) {
    if (p >= threshold) out.insert(bits);
  }
  if (out.empty()) {
    throw ValidationError("correct_outcomes", "no outcome of '" + circuit.name + "' reaches probability " +
                                                  std::to_string(threshold) + "; supply an explicit correct set");
  }
  return out;
}

double compute_pst(const OutcomeHistogram& hist, const std::set<std::string>& correct) {
  if (correct.empty()) throw ValidationError("correct", "empty correct-outcome set");
  if (hist.shots == 0) throw ValidationError("shots", "histogram has no shots");
  std::uint64_t hits = 0;
  for (const std::string& bits : correct) {
    if (static_cast<int>(bits.size()) != hist.n_bits) {
      throw ValidationError("correct", "outcome '" + bits + "' has length " + std::to_string(bits.size()) +
                                           ", histogram has " + std::to_string(hist.n_bits) + " bits");
    }
    hits += hist.count(bits);
  }
  return static_cast<double>(hits) / static_cast<double>(hist.shots);
}

std::vector<OutcomeHistogram> split_merged_histogram(const OutcomeHistogram& hist, const std::vector<CbitRange>& ranges) {
  std::vector<int> cover(static_cast<std::size_t>(hist.n_bits), 0);
  for (auto [lo, hi] : ranges) {
    if (lo < 0 || hi > hist.n_bits || lo > hi) {
      throw ValidationError("ranges", "range [" + std::to_string(lo) + ", " + std::to_string(hi) + ") outside [0, " +
                                          std::to_string(hist.n_bits) + ")");
    }
    for (int c = lo; c < hi; ++c) ++cover[static_cast<std::size_t>(c)];
  }
  for (int c = 0; c < hist.n_bits; ++c) {
    if (cover[static_cast<std::size_t>(c)] > 1) throw ValidationError("ranges", "ranges overlap at bit " + std::to_string(c));
    if (cover[static_cast<std::size_t>(c)] == 0) throw ValidationError("ranges", "ranges leave bit " + std::to_string(c) + " uncovered");
  }
  std::vector<OutcomeHistogram> out;
  for (auto [lo, hi] : ranges) {
    OutcomeHistogram part;
    part.n_bits = hi - lo;
    part.shots = hist.shots;
    for (const auto& [bits, count] : hist.counts) {
      part.counts[bits.substr(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo))] += count;
    }
    out.push_back(std::move(part));
  }
  return out;
}

std::string modal_outcome(const OutcomeHistogram& hist) {
  std::string best;
  std::uint64_t best_count = 0;
  for (const auto& [bits, count] : hist.counts) {
    if (count > best_count) {
      best = bits;
      best_count = count;
    }
  }
  return best;
}

}  // namespace qmp
