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

#include "qmp/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "qmp/error.hpp"

namespace qmp {

using nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

ordered_json parse_document(std::string_view text, std::string_view kind) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw ValidationError("report", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("kind", std::string{}) != kind) {
    throw ValidationError("kind", "expected a " + std::string(kind) + " document");
  }
  if (doc.value("format_version", 0) != kFormatVersion) {
    throw ValidationError("format_version", "unsupported report format version");
  }
  return doc;
}

ordered_json device_json(const DeviceModel& d) { return ordered_json::parse(dump_device(d)); }

ordered_json noise_json(const NoiseModel& n) {
  return {{"p1q", n.p1q},
          {"p2q", n.p2q},
          {"p_ro", n.p_ro},
          {"crosstalk_enabled", n.crosstalk_enabled},
          {"crosstalk_lambda", n.crosstalk_lambda}};
}

NoiseModel noise_from(const ordered_json& j) {
  NoiseModel n;
  n.p1q = j.at("p1q").get<double>();
  n.p2q = j.at("p2q").get<double>();
  n.p_ro = j.at("p_ro").get<double>();
  n.crosstalk_enabled = j.at("crosstalk_enabled").get<bool>();
  n.crosstalk_lambda = j.at("crosstalk_lambda").get<double>();
  return n;
}

ordered_json weights_json(const ScheduleWeights& w) {
  return {{"one_qubit", w.one_qubit}, {"two_qubit", w.two_qubit}, {"measure", w.measure}};
}

ScheduleWeights weights_from(const ordered_json& j) {
  ScheduleWeights w;
  w.one_qubit = j.at("one_qubit").get<decltype(w.one_qubit)>();
  w.two_qubit = j.at("two_qubit").get<decltype(w.two_qubit)>();
  w.measure = j.at("measure").get<decltype(w.measure)>();
  return w;
}

ordered_json savings_json(const SavingsSummary& s) {
  return {{"independent", s.independent}, {"merged", s.merged}, {"savings", s.savings}};
}

SavingsSummary savings_from(const ordered_json& j) {
  return {j.at("independent").get<double>(), j.at("merged").get<double>(), j.at("savings").get<double>()};
}

ordered_json histogram_obj(const OutcomeHistogram& h) {
  ordered_json counts = ordered_json::object();
  for (const auto& [bits, c] : h.counts) counts[bits] = c;
  return {{"n_bits", h.n_bits}, {"shots", h.shots}, {"counts", counts}};
}

OutcomeHistogram histogram_from(const ordered_json& j) {
  OutcomeHistogram h;
  h.n_bits = j.at("n_bits").get<int>();
  h.shots = j.at("shots").get<std::uint64_t>();
  for (const auto& [bits, c] : j.at("counts").items()) h.counts[bits] = c.get<std::uint64_t>();
  return h;
}

ordered_json run_json(const QaoaRun& r) {
  return {{"embedding", r.embedding},
          {"success_mass", r.success_mass},
          {"modal", r.modal},
          {"histogram", histogram_obj(r.counts)}};
}

QaoaRun run_from(const ordered_json& j) {
  QaoaRun r;
  r.embedding = j.at("embedding").get<std::vector<int>>();
  r.success_mass = j.at("success_mass").get<double>();
  r.modal = j.at("modal").get<std::string>();
  r.counts = histogram_from(j.at("histogram"));
  return r;
}

ordered_json graph_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    edges.push_back({g.edges()[e].first, g.edges()[e].second, g.weights()[e]});
  }
  return {{"n_nodes", g.n_nodes()}, {"edges", edges}};
}

Graph graph_from(const ordered_json& j) {
  Graph g(j.at("n_nodes").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
  return g;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename Fn>
auto with_schema_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const ordered_json::exception& e) {
    throw ValidationError("report", std::string("schema violation: ") + e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string suite_report_json(const SuiteReport& r) {
  ordered_json doc;
  doc["kind"] = "suite_report";
  doc["format_version"] = kFormatVersion;

  const SuiteProvenance& p = r.provenance;
  ordered_json pairing = ordered_json::array();
  for (auto [a, b] : p.pairing) pairing.push_back({a, b});
  doc["provenance"] = {{"device", device_json(p.device)},
                       {"noise", noise_json(p.noise)},
                       {"shots", p.shots},
                       {"seeds", p.seeds},
                       {"pairing", pairing},
                       {"correct_threshold", p.correct_threshold},
                       {"schedule_weights", weights_json(p.weights)},
                       {"seed_derivation", p.seed_derivation}};

  ordered_json records = ordered_json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"pair", rec.pair},
                       {"slot", rec.slot},
                       {"benchmark_id", rec.benchmark_id},
                       {"benchmark", rec.benchmark},
                       {"correct", rec.correct},
                       {"standalone_pst", rec.standalone_pst},
                       {"simultaneous_pst", rec.simultaneous_pst},
                       {"standalone_mean", rec.standalone_mean},
                       {"simultaneous_mean", rec.simultaneous_mean},
                       {"drop", rec.drop}});
  }
  doc["records"] = records;

  ordered_json pairs = ordered_json::array();
  for (const auto& s : r.pairs) {
    pairs.push_back({{"index", s.index},
                     {"benchmark_ids", s.benchmark_ids},
                     {"merged_embeddings", s.merged_embeddings},
                     {"standalone_embeddings", s.standalone_embeddings},
                     {"merged_scores", s.merged_scores},
                     {"merged_duration", s.merged_duration},
                     {"standalone_durations", s.standalone_durations},
                     {"merged_cost", s.merged_cost},
                     {"standalone_costs", s.standalone_costs},
                     {"merged_exposed_gates", s.merged_exposed_gates},
                     {"standalone_exposed_gates", s.standalone_exposed_gates}});
  }
  doc["pairs"] = pairs;

  const SuiteAggregate& a = r.aggregate;
  doc["aggregate"] = {{"mean_standalone_pst", a.mean_standalone_pst},
                      {"mean_simultaneous_pst", a.mean_simultaneous_pst},
                      {"mean_drop", a.mean_drop},
                      {"mean_drop_stderr", a.mean_drop_stderr},
                      {"drop_by_seed", a.drop_by_seed},
                      {"mean_relative_drop", a.mean_relative_drop},
                      {"relative_drop_of_means", a.relative_drop_of_means}};
  doc["cost"] = savings_json(r.cost);
  doc["cost"]["published_reduction"] = kPublishedSuiteBudgetReduction;
  doc["runtime"] = savings_json(r.runtime);
  return doc.dump(2) + "\n";
}

SuiteReport parse_suite_report(std::string_view text) {
  const ordered_json doc = parse_document(text, "suite_report");
  return with_schema_errors([&] {
    SuiteReport r;
    const auto& p = doc.at("provenance");
    r.provenance.device = load_device(p.at("device").dump());
    r.provenance.noise = noise_from(p.at("noise"));
    r.provenance.shots = p.at("shots").get<std::uint64_t>();
    r.provenance.seeds = p.at("seeds").get<std::vector<std::uint64_t>>();
    for (const auto& pr : p.at("pairing")) r.provenance.pairing.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
    r.provenance.correct_threshold = p.at("correct_threshold").get<double>();
    r.provenance.weights = weights_from(p.at("schedule_weights"));
    r.provenance.seed_derivation = p.at("seed_derivation").get<std::string>();

    for (const auto& j : doc.at("records")) {
      SuiteRecord rec;
      rec.pair = j.at("pair").get<int>();
      rec.slot = j.at("slot").get<int>();
      rec.benchmark_id = j.at("benchmark_id").get<int>();
      rec.benchmark = j.at("benchmark").get<std::string>();
      rec.correct = j.at("correct").get<std::vector<std::string>>();
      rec.standalone_pst = j.at("standalone_pst").get<std::vector<double>>();
      rec.simultaneous_pst = j.at("simultaneous_pst").get<std::vector<double>>();
      rec.standalone_mean = j.at("standalone_mean").get<double>();
      rec.simultaneous_mean = j.at("simultaneous_mean").get<double>();
      rec.drop = j.at("drop").get<double>();
      r.records.push_back(std::move(rec));
    }
    for (const auto& j : doc.at("pairs")) {
      PairSummary s;
      s.index = j.at("index").get<int>();
      s.benchmark_ids = j.at("benchmark_ids").get<std::vector<int>>();
      s.merged_embeddings = j.at("merged_embeddings").get<std::vector<std::vector<int>>>();
      s.standalone_embeddings = j.at("standalone_embeddings").get<std::vector<std::vector<int>>>();
      s.merged_scores = j.at("merged_scores").get<std::vector<double>>();
      s.merged_duration = j.at("merged_duration").get<std::size_t>();
      s.standalone_durations = j.at("standalone_durations").get<std::vector<std::size_t>>();
      s.merged_cost = j.at("merged_cost").get<double>();
      s.standalone_costs = j.at("standalone_costs").get<std::vector<double>>();
      s.merged_exposed_gates = j.at("merged_exposed_gates").get<std::size_t>();
      s.standalone_exposed_gates = j.at("standalone_exposed_gates").get<std::vector<std::size_t>>();
      r.pairs.push_back(std::move(s));
    }
    const auto& a = doc.at("aggregate");
    r.aggregate.mean_standalone_pst = a.at("mean_standalone_pst").get<double>();
    r.aggregate.mean_simultaneous_pst = a.at("mean_simultaneous_pst").get<double>();
    r.aggregate.mean_drop = a.at("mean_drop").get<double>();
    r.aggregate.mean_drop_stderr = a.at("mean_drop_stderr").get<double>();
    r.aggregate.drop_by_seed = a.at("drop_by_seed").get<std::vector<double>>();
    r.aggregate.mean_relative_drop = a.at("mean_relative_drop").get<double>();
    r.aggregate.relative_drop_of_means = a.at("relative_drop_of_means").get<double>();
    r.cost = savings_from(doc.at("cost"));
    r.runtime = savings_from(doc.at("runtime"));
    return r;
  });
}

std::string suite_report_csv(const SuiteReport& r) {
  std::string out(kSuiteCsvHeader);
  out += '\n';
  const auto& seeds = r.provenance.seeds;
  for (const auto& rec : r.records) {
    for (int mode = 0; mode < 2; ++mode) {
      const auto& pst = mode == 0 ? rec.standalone_pst : rec.simultaneous_pst;
      for (std::size_t s = 0; s < seeds.size() && s < pst.size(); ++s) {
        out += std::to_string(rec.pair) + ',' + std::to_string(rec.slot) + ',' + std::to_string(rec.benchmark_id) +
               ',' + csv_field(rec.benchmark) + ',' + (mode == 0 ? "standalone" : "simultaneous") + ',' +
               std::to_string(seeds[s]) + ',' + std::to_string(r.provenance.shots) + ',' + format_double(pst[s]) +
               '\n';
      }
    }
  }
  return out;
}

std::string qaoa_report_json(const ParallelQaoaReport& r) {
  ordered_json doc;
  doc["kind"] = "parallel_qaoa_report";
  doc["format_version"] = kFormatVersion;
  const ParallelQaoaProvenance& p = r.provenance;
  doc["provenance"] = {{"device", device_json(p.device)},
                       {"noise", noise_json(p.noise)},
                       {"graph", graph_json(p.graph)},
                       {"copies", p.copies},
                       {"shots", p.shots},
                       {"seed", p.seed},
                       {"p", p.p},
                       {"optimizer",
                        {{"max_evals", p.optimizer.max_evals},
                         {"rho_begin", p.optimizer.rho_begin},
                         {"rho_end", p.optimizer.rho_end}}},
                       {"seed_derivation", p.seed_derivation}};
  doc["params"] = {{"p", r.params.p}, {"gammas", r.params.gammas}, {"betas", r.params.betas}};
  doc["ideal_expectation"] = r.ideal_expectation;
  doc["optimizer_evaluations"] = r.optimizer_evaluations;
  doc["maxcut_value"] = r.maxcut_value;
  doc["optimal"] = r.optimal;
  ordered_json copies = ordered_json::array();
  for (const auto& c : r.copies) copies.push_back(run_json(c));
  doc["copies"] = copies;
  doc["standalone"] = run_json(r.standalone);
  doc["merged_duration"] = r.merged_duration;
  doc["standalone_duration"] = r.standalone_duration;
  doc["merged_cost"] = r.merged_cost;
  doc["standalone_cost"] = r.standalone_cost;
  doc["cost"] = savings_json(r.cost);
  doc["runtime"] = savings_json(r.runtime);
  doc["published_budget_reduction"] = r.published_budget_reduction;
  return doc.dump(2) + "\n";
}

ParallelQaoaReport parse_qaoa_report(std::string_view text) {
  const ordered_json doc = parse_document(text, "parallel_qaoa_report");
  return with_schema_errors([&] {
    ParallelQaoaReport r;
    const auto& p = doc.at("provenance");
    r.provenance.device = load_device(p.at("device").dump());
    r.provenance.noise = noise_from(p.at("noise"));
    r.provenance.graph = graph_from(p.at("graph"));
    r.provenance.copies = p.at("copies").get<int>();
    r.provenance.shots = p.at("shots").get<std::uint64_t>();
    r.provenance.seed = p.at("seed").get<std::uint64_t>();
    r.provenance.p = p.at("p").get<int>();
    r.provenance.optimizer.max_evals = p.at("optimizer").at("max_evals").get<int>();
    r.provenance.optimizer.rho_begin = p.at("optimizer").at("rho_begin").get<double>();
    r.provenance.optimizer.rho_end = p.at("optimizer").at("rho_end").get<double>();
    r.provenance.seed_derivation = p.at("seed_derivation").get<std::string>();
    r.params.p = doc.at("params").at("p").get<int>();
    r.params.gammas = doc.at("params").at("gammas").get<std::vector<double>>();
    r.params.betas = doc.at("params").at("betas").get<std::vector<double>>();
    r.ideal_expectation = doc.at("ideal_expectation").get<double>();
    r.optimizer_evaluations = doc.at("optimizer_evaluations").get<int>();
    r.maxcut_value = doc.at("maxcut_value").get<double>();
    r.optimal = doc.at("optimal").get<std::vector<std::string>>();
    for (const auto& c : doc.at("copies")) r.copies.push_back(run_from(c));
    r.standalone = run_from(doc.at("standalone"));
    r.merged_duration = doc.at("merged_duration").get<std::size_t>();
    r.standalone_duration = doc.at("standalone_duration").get<std::size_t>();
    r.merged_cost = doc.at("merged_cost").get<double>();
    r.standalone_cost = doc.at("standalone_cost").get<double>();
    r.cost = savings_from(doc.at("cost"));
    r.runtime = savings_from(doc.at("runtime"));
    r.published_budget_reduction = doc.at("published_budget_reduction").get<double>();
    return r;
  });
}

std::string qaoa_report_csv(const ParallelQaoaReport& r) {
  std::string out(kQaoaCsvHeader);
  out += '\n';
  const auto emit = [&](const std::string& run, int copy, const QaoaRun& q) {
    for (const auto& [bits, count] : q.counts.counts) {
      const double freq = static_cast<double>(count) / static_cast<double>(q.counts.shots);
      out += run + ',' + std::to_string(copy) + ',' + bits + ',' + std::to_string(count) + ',' + format_double(freq) +
             ',' + format_double(cut_value(r.provenance.graph, bits)) + '\n';
    }
  };
  for (std::size_t i = 0; i < r.copies.size(); ++i) emit("merged", static_cast<int>(i), r.copies[i]);
  emit("standalone", 0, r.standalone);
  return out;
}

std::string histogram_json(const OutcomeHistogram& hist) { return histogram_obj(hist).dump(2) + "\n"; }

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path.string() + "': location is not writable");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot move report into place at '" + path.string() + "'");
  }
}

void emit_report(const SuiteReport& report, ReportFormat format, const std::filesystem::path& path) {
  write_file_atomic(path, format == ReportFormat::Structured ? suite_report_json(report) : suite_report_csv(report));
}

void emit_report(const ParallelQaoaReport& report, ReportFormat format, const std::filesystem::path& path) {
  write_file_atomic(path, format == ReportFormat::Structured ? qaoa_report_json(report) : qaoa_report_csv(report));
}

}  // namespace qmp
