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

#include "qmp/simulator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "qmp/error.hpp"
#include "qmp/statevector.hpp"

namespace qmp {
namespace {

// Independent group of qubits with the unitary gates acting on it.
struct Block {
  std::vector<int> qubits;                // global indices, ascending
  std::vector<std::size_t> gates;         // indices into circuit.gates
  std::vector<std::pair<int, int>> measures;  // (local qubit, cbit)
  std::vector<double> ideal_cdf;          // cumulative ideal probabilities
};

struct Plan {
  int n_qubits = 0;
  int n_cbits = 0;
  std::vector<Block> blocks;
  std::vector<int> gate_block;  // -1 for Measure/Barrier
  std::vector<int> local;       // global qubit -> index within its block
  std::vector<int> measured_cbits;  // cbits in measurement order
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

StateVector evolve_ideal(const QuantumCircuit& circuit, const Plan& plan, const Block& block) {
  StateVector sv(static_cast<int>(block.qubits.size()));
  for (std::size_t gi : block.gates) sv.apply(circuit.gates[gi], plan.local);
  return sv;
}

Plan make_plan(const QuantumCircuit& circuit, bool split_blocks) {
  circuit.validate();
  if (circuit.n_cbits > 64) throw ValidationError("n_cbits", "at most 64 classical bits are supported");
  const auto nq = static_cast<std::size_t>(circuit.n_qubits);
  Plan plan;
  plan.n_qubits = circuit.n_qubits;
  plan.n_cbits = circuit.n_cbits;
  plan.gate_block.assign(circuit.gates.size(), -1);
  plan.local.assign(nq, -1);

  std::vector<bool> active(nq, false), measured(nq, false);
  std::vector<int> parent(nq);
  std::iota(parent.begin(), parent.end(), 0);
  int first_active = -1;
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::Barrier) continue;
    for (int q : g.qubits) {
      if (is_unitary(g.kind) && measured[static_cast<std::size_t>(q)]) {
        throw ValidationError("circuit", "gate after measurement on qubit " + std::to_string(q) +
                                             "; only terminal measurements are supported");
      }
      active[static_cast<std::size_t>(q)] = true;
      if (first_active < 0) first_active = q;
      if (!split_blocks) parent[static_cast<std::size_t>(find_root(parent, q))] = find_root(parent, first_active);
    }
    if (g.kind == GateKind::Measure) measured[static_cast<std::size_t>(g.qubits[0])] = true;
    for (std::size_t k = 1; k < g.qubits.size(); ++k) {
      parent[static_cast<std::size_t>(find_root(parent, g.qubits[k]))] = find_root(parent, g.qubits[0]);
    }
  }
  const auto n_active = std::count(active.begin(), active.end(), true);
  if (n_active > kMaxSimulatedQubits) {
    throw ValidationError("n_qubits", "qubit-count cap exceeded: " + std::to_string(n_active) + " active qubits > " +
                                          std::to_string(kMaxSimulatedQubits));
  }

  std::vector<int> block_of_root(nq, -1);
  std::vector<int> qubit_block(nq, -1);
  for (std::size_t q = 0; q < nq; ++q) {
    if (!active[q]) continue;
    const auto root = static_cast<std::size_t>(find_root(parent, static_cast<int>(q)));
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<int>(plan.blocks.size());
      plan.blocks.emplace_back();
    }
    Block& b = plan.blocks[static_cast<std::size_t>(block_of_root[root])];
    plan.local[q] = static_cast<int>(b.qubits.size());
    qubit_block[q] = block_of_root[root];
    b.qubits.push_back(static_cast<int>(q));
  }
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const Gate& g = circuit.gates[i];
    if (g.kind == GateKind::Barrier) continue;
    const int block = qubit_block[static_cast<std::size_t>(g.qubits[0])];
    if (g.kind == GateKind::Measure) {
      plan.blocks[static_cast<std::size_t>(block)].measures.emplace_back(plan.local[static_cast<std::size_t>(g.qubits[0])],
                                                                        g.cbit);
      plan.measured_cbits.push_back(g.cbit);
      continue;
    }
    plan.gate_block[i] = block;
    plan.blocks[static_cast<std::size_t>(block)].gates.push_back(i);
  }
  return plan;
}

void build_cdfs(const QuantumCircuit& circuit, Plan& plan) {
  for (Block& b : plan.blocks) {
    const StateVector sv = evolve_ideal(circuit, plan, b);
    b.ideal_cdf.resize(sv.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < sv.size(); ++i) {
      acc += std::norm(sv.amplitudes()[i]);
      b.ideal_cdf[i] = acc;
    }
  }
}

std::uint64_t cbit_mask(const Block& b, std::uint64_t local_index) {
  std::uint64_t bits = 0;
  for (auto [lq, cbit] : b.measures) {
    if ((local_index >> lq) & 1U) bits |= std::uint64_t{1} << cbit;
  }
  return bits;
}

std::string to_bitstring(std::uint64_t bits, int n_bits) {
  std::string s(static_cast<std::size_t>(n_bits), '0');
  for (int c = 0; c < n_bits; ++c) {
    if ((bits >> c) & 1U) s[static_cast<std::size_t>(c)] = '1';
  }
  return s;
}

Distribution distribution_from_plan(const QuantumCircuit& circuit, const Plan& plan) {
  std::map<std::uint64_t, double> joint{{0, 1.0}};
  for (const Block& b : plan.blocks) {
    const StateVector sv = evolve_ideal(circuit, plan, b);
    std::map<std::uint64_t, double> marginal;
    for (std::size_t i = 0; i < sv.size(); ++i) {
      const double p = std::norm(sv.amplitudes()[i]);
      if (p > 0.0) marginal[cbit_mask(b, i)] += p;
    }
    std::map<std::uint64_t, double> next;
    for (auto [bits_a, pa] : joint) {
      for (auto [bits_b, pb] : marginal) next[bits_a | bits_b] += pa * pb;
    }
    joint = std::move(next);
  }
  Distribution d;
  d.n_bits = circuit.n_cbits;
  for (auto [bits, p] : joint) {
    if (p >= kPruneThreshold) d.probabilities[to_bitstring(bits, circuit.n_cbits)] += p;
  }
  return d;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) { return ((rng() >> 32) * m) >> 32; }

std::size_t sample_index(const std::vector<double>& cdf, double u) {
  const double target = u * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  return std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

struct Injection {
  std::size_t gate;
  std::uint64_t code;  // 1..3 single-qubit, 1..15 two-qubit (low 2 bits: first operand)
};

std::uint64_t run_shot(const QuantumCircuit& circuit, const Plan& plan, const NoiseModel& noise,
                       const Schedule* schedule, std::uint64_t seed, std::uint64_t shot) {
  std::mt19937_64 rng(mix_seed(seed, shot));

  std::vector<Injection> injections;
  std::vector<bool> dirty(plan.blocks.size(), false);
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    if (plan.gate_block[i] < 0) continue;
    const GateKind kind = circuit.gates[i].kind;
    double p = 0.0;
    std::uint64_t choices = 0;
    if (is_single_qubit(kind)) {
      p = noise.p1q;
      choices = 3;
    } else if (is_two_qubit(kind)) {
      p = noise.two_qubit_probability(schedule != nullptr && schedule->crosstalk_exposed[i]);
      choices = 15;
    }
    if (p <= 0.0) continue;
    if (uniform01(rng) < p) {
      injections.push_back({i, 1 + uniform_below(rng, choices)});
      dirty[static_cast<std::size_t>(plan.gate_block[i])] = true;
    }
  }

  std::uint64_t bits = 0;
  for (std::size_t bi = 0; bi < plan.blocks.size(); ++bi) {
    const Block& b = plan.blocks[bi];
    const double u = uniform01(rng);
    if (!dirty[bi]) {
      bits |= cbit_mask(b, sample_index(b.ideal_cdf, u));
      continue;
    }
    StateVector sv(static_cast<int>(b.qubits.size()));
    auto next_injection = injections.begin();
    for (std::size_t gi : b.gates) {
      const Gate& g = circuit.gates[gi];
      sv.apply(g, plan.local);
      while (next_injection != injections.end() && next_injection->gate < gi) ++next_injection;
      if (next_injection != injections.end() && next_injection->gate == gi) {
        const std::uint64_t code = next_injection->code;
        sv.apply_pauli(plan.local[static_cast<std::size_t>(g.qubits[0])], static_cast<Pauli>(code & 3U));
        if (g.qubits.size() == 2) {
          sv.apply_pauli(plan.local[static_cast<std::size_t>(g.qubits[1])], static_cast<Pauli>(code >> 2));
        }
      }
    }
    std::vector<double> cdf(sv.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < sv.size(); ++i) {
      acc += std::norm(sv.amplitudes()[i]);
      cdf[i] = acc;
    }
    bits |= cbit_mask(b, sample_index(cdf, u));
  }

  if (noise.p_ro > 0.0) {
    for (int cbit : plan.measured_cbits) {
      if (uniform01(rng) < noise.p_ro) bits ^= std::uint64_t{1} << cbit;
    }
  }
  return bits;
}

Plan prepare_sampling(const QuantumCircuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                      const Schedule* schedule) {
  if (shots == 0) throw ValidationError("shots", "must be >= 1");
  noise.validate();
  if (schedule != nullptr && schedule->start.size() != circuit.gates.size()) {
    throw ValidationError("schedule", "covers " + std::to_string(schedule->start.size()) + " gates, circuit has " +
                                          std::to_string(circuit.gates.size()));
  }
  Plan plan = make_plan(circuit, true);
  build_cdfs(circuit, plan);
  return plan;
}

OutcomeHistogram reduce_outcomes(const std::vector<std::uint64_t>& outcomes, int n_bits) {
  std::map<std::uint64_t, std::uint64_t> tally;
  for (std::uint64_t o : outcomes) ++tally[o];
  OutcomeHistogram h;
  h.n_bits = n_bits;
  h.shots = outcomes.size();
  for (auto [bits, count] : tally) h.counts[to_bitstring(bits, n_bits)] = count;
  return h;
}

}  // namespace

double Distribution::probability(const std::string& bits) const {
  auto it = probabilities.find(bits);
  return it == probabilities.end() ? 0.0 : it->second;
}

double Distribution::total() const {
  double t = 0.0;
  for (const auto& [k, p] : probabilities) t += p;
  return t;
}

std::uint64_t OutcomeHistogram::count(const std::string& bits) const {
  auto it = counts.find(bits);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Distribution ideal_distribution(const QuantumCircuit& circuit) {
  return distribution_from_plan(circuit, make_plan(circuit, true));
}

Distribution ideal_distribution_dense(const QuantumCircuit& circuit) {
  return distribution_from_plan(circuit, make_plan(circuit, false));
}

OutcomeHistogram sample_counts(const QuantumCircuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                               std::uint64_t seed, const Schedule* schedule) {
  const Plan plan = prepare_sampling(circuit, noise, shots, schedule);
  std::vector<std::uint64_t> outcomes(shots);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(shots); ++s) {
    outcomes[static_cast<std::size_t>(s)] =
        run_shot(circuit, plan, noise, schedule, seed, static_cast<std::uint64_t>(s));
  }
  return reduce_outcomes(outcomes, circuit.n_cbits);
}

OutcomeHistogram sample_counts_serial(const QuantumCircuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                                      std::uint64_t seed, const Schedule* schedule) {
  const Plan plan = prepare_sampling(circuit, noise, shots, schedule);
  std::vector<std::uint64_t> outcomes;
  outcomes.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) outcomes.push_back(run_shot(circuit, plan, noise, schedule, seed, s));
  return reduce_outcomes(outcomes, circuit.n_cbits);
}

}  // namespace qmp
