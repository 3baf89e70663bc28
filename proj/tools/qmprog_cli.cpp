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

// qmprog: command-line driver for the multi-programming toolchain.
//
// Exit codes: 0 success, 1 domain error (bad input, infeasible request),
// 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmp/campaign.hpp"
#include "qmp/error.hpp"
#include "qmp/metrics.hpp"
#include "qmp/pipeline.hpp"
#include "qmp/qaoa.hpp"
#include "qmp/qasm.hpp"
#include "qmp/report.hpp"
#include "qmp/suite.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kOutputDirEnv = "QMPROG_OUTPUT_DIR";

fs::path default_output_dir() {
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return "qmprog-out";
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw qmp::Error("cannot create output directory '" + dir.string() + "'");
}

std::uint64_t default_shots(const qmp::DeviceModel& device) {
  return device.technology == qmp::Technology::TrappedIon ? 100 : 8192;
}

void write_or_print(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    qmp::write_file_atomic(out, text);
  }
}

// Options shared by the commands that run on a device.
struct DeviceOptions {
  std::string config;
  std::string device;
  std::optional<double> lambda;
  std::optional<std::string> crosstalk;

  void add_to(CLI::App* cmd, bool with_config) {
    if (with_config) cmd->add_option("--config", config, "campaign config (JSON)")->check(CLI::ExistingFile);
    cmd->add_option("--device", device, "builtin device (ibmq_mumbai_like, h1_2_like) or device-config path");
    cmd->add_option("--lambda", lambda, "crosstalk amplification factor");
    cmd->add_option("--crosstalk", crosstalk, "enable or disable crosstalk amplification")
        ->check(CLI::IsMember({"on", "off"}));
  }

  qmp::CampaignConfig campaign() const {
    qmp::CampaignConfig cfg = config.empty() ? qmp::CampaignConfig{} : qmp::load_campaign(config);
    if (!device.empty()) cfg.device = device;
    if (lambda) cfg.noise.crosstalk_lambda = *lambda;
    if (crosstalk) cfg.noise.crosstalk_enabled = *crosstalk == "on";
    if (!cfg.device) throw qmp::ValidationError("device", "no device given (use --device or a config file)");
    return cfg;
  }
};

ordered_json allocation_json(const qmp::Allocation& a) {
  ordered_json progs = ordered_json::array();
  for (const auto& p : a.programs) {
    progs.push_back({{"circuit", p.circuit_id}, {"embedding", p.embedding}, {"swaps", p.swaps}, {"score", p.score}});
  }
  return {{"device", a.device}, {"programs", progs}};
}

int cmd_stats(const std::string& file) {
  const qmp::QuantumCircuit c = qmp::load_qasm_file(file);
  const qmp::CircuitStats s = qmp::circuit_stats(c);
  std::cout << "name=" << c.name << " qubits=" << s.n_qubits << " gates=" << s.total_gates << " cx=" << s.cx_count
            << " ccx=" << s.three_qubit_count << " measures=" << s.measure_count << " depth=" << s.depth << "\n";
  return 0;
}

int cmd_rebase(const std::string& file, const std::string& basis, const std::string& device, bool verify,
               const std::string& out) {
  if (basis.empty() == device.empty()) throw qmp::ValidationError("basis", "give exactly one of --basis or --device");
  const qmp::Basis target = basis.empty() ? qmp::resolve_device(device).basis : qmp::parse_basis(basis);
  const qmp::QuantumCircuit c = qmp::load_qasm_file(file);
  const qmp::QuantumCircuit r = qmp::rebase_to_basis(c, target);
  if (verify && !qmp::verify_equivalence(qmp::strip_non_unitary(c), qmp::strip_non_unitary(r))) {
    throw qmp::Error("rebased circuit is not equivalent to the input");
  }
  write_or_print(out, qmp::emit_qasm(r));
  return 0;
}

int cmd_allocate(const std::vector<std::string>& files, const DeviceOptions& opts, const std::string& out) {
  const qmp::CampaignConfig cfg = opts.campaign();
  const auto dev = qmp::resolve_campaign_device(*cfg.device, cfg.noise, cfg.cost);
  std::vector<qmp::QuantumCircuit> circuits;
  for (const auto& f : files) circuits.push_back(qmp::rebase_to_basis(qmp::load_qasm_file(f), dev.device.basis));
  const qmp::Allocation a = qmp::allocate_partitions(dev.device, circuits);
  write_or_print(out, allocation_json(a).dump(2) + "\n");
  return 0;
}

int cmd_simulate(const std::vector<std::string>& files, const DeviceOptions& opts, std::optional<std::uint64_t> shots,
                 std::uint64_t seed, bool noiseless, const std::string& out) {
  const qmp::CampaignConfig cfg = opts.campaign();
  const auto dev = qmp::resolve_campaign_device(*cfg.device, cfg.noise, cfg.cost);
  std::vector<qmp::QuantumCircuit> circuits;
  for (const auto& f : files) circuits.push_back(qmp::load_qasm_file(f));
  const qmp::CompiledJob job = qmp::compile_job(dev.device, circuits, cfg.schedule.value_or(qmp::ScheduleWeights{}));
  const qmp::NoiseModel noise = noiseless ? qmp::NoiseModel{} : dev.noise;
  const std::uint64_t n_shots = shots.value_or(cfg.shots.value_or(default_shots(dev.device)));
  const qmp::OutcomeHistogram joint = qmp::sample_counts(job.circuit, noise, n_shots, seed, &job.schedule);
  const auto parts = qmp::split_merged_histogram(joint, job.cbit_ranges);

  ordered_json doc;
  doc["device"] = dev.device.name;
  doc["shots"] = n_shots;
  doc["seed"] = seed;
  doc["noiseless"] = noiseless;
  doc["allocation"] = allocation_json(job.allocation);
  ordered_json programs = ordered_json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    programs.push_back({{"circuit", circuits[i].name},
                        {"modal", qmp::modal_outcome(parts[i])},
                        {"histogram", ordered_json::parse(qmp::histogram_json(parts[i]))}});
  }
  doc["programs"] = programs;
  write_or_print(out, doc.dump(2) + "\n");
  return 0;
}

int cmd_cost(const std::vector<std::string>& files, const DeviceOptions& opts, std::optional<std::uint64_t> shots) {
  const qmp::CampaignConfig cfg = opts.campaign();
  const auto dev = qmp::resolve_campaign_device(*cfg.device, cfg.noise, cfg.cost);
  const std::uint64_t n_shots = shots.value_or(cfg.shots.value_or(default_shots(dev.device)));
  std::vector<qmp::QuantumCircuit> circuits;
  for (const auto& f : files) circuits.push_back(qmp::load_qasm_file(f));
  double independent = 0.0;
  for (const auto& c : circuits) {
    const qmp::CompiledJob job = qmp::compile_job(dev.device, std::span(&c, 1));
    const double credits = qmp::cost_from_counts(dev.device.cost, job.counts, n_shots);
    independent += credits;
    std::cout << "program=" << c.name << " credits=" << qmp::format_double(credits) << "\n";
  }
  if (circuits.size() > 1) {
    const qmp::CompiledJob merged = qmp::compile_job(dev.device, circuits);
    const double credits = qmp::cost_from_counts(dev.device.cost, merged.counts, n_shots);
    std::cout << "merged credits=" << qmp::format_double(credits)
              << " independent=" << qmp::format_double(independent)
              << " savings=" << qmp::format_double(1.0 - credits / independent) << "\n";
  }
  return 0;
}

int cmd_suite(const DeviceOptions& opts, std::optional<std::uint64_t> shots, const std::string& seeds,
              const std::string& pairing, const std::string& manifest, const std::string& out) {
  qmp::CampaignConfig cfg = opts.campaign();
  if (!seeds.empty()) cfg.seeds = qmp::parse_seed_list(seeds);
  if (!pairing.empty()) cfg.pairing = qmp::parse_pairing(pairing);
  if (!manifest.empty()) cfg.manifest = manifest;
  if (!out.empty()) cfg.output = out;
  if (!cfg.seeds || cfg.seeds->empty()) throw qmp::ValidationError("seeds", "an explicit seed list is required");

  const auto dev = qmp::resolve_campaign_device(*cfg.device, cfg.noise, cfg.cost);
  qmp::SuiteOptions options;
  options.seeds = *cfg.seeds;
  options.shots = shots.value_or(cfg.shots.value_or(default_shots(dev.device)));
  if (cfg.pairing) options.pairing = *cfg.pairing;
  if (cfg.schedule) options.weights = *cfg.schedule;
  const auto bench = qmp::BenchmarkManifest::load(cfg.manifest.value_or(qmp::default_manifest_path()));

  const qmp::SuiteReport report = qmp::run_benchmark_suite(dev.device, dev.noise, bench, options);
  const fs::path dir = cfg.output.value_or(default_output_dir());
  ensure_directory(dir);
  qmp::emit_report(report, qmp::ReportFormat::Structured, dir / "suite_report.json");
  qmp::emit_report(report, qmp::ReportFormat::Csv, dir / "suite_report.csv");

  const auto& a = report.aggregate;
  std::cout << "device=" << dev.device.name << " pairs=" << report.pairs.size() << " seeds=" << options.seeds.size()
            << " shots=" << options.shots << "\n"
            << "mean_standalone_pst=" << qmp::format_double(a.mean_standalone_pst)
            << " mean_simultaneous_pst=" << qmp::format_double(a.mean_simultaneous_pst) << "\n"
            << "mean_drop=" << qmp::format_double(a.mean_drop) << " stderr=" << qmp::format_double(a.mean_drop_stderr)
            << "\n"
            << "cost_savings=" << qmp::format_double(report.cost.savings)
            << " runtime_savings=" << qmp::format_double(report.runtime.savings) << "\n"
            << "wrote " << (dir / "suite_report.json").string() << " and " << (dir / "suite_report.csv").string()
            << "\n";
  return 0;
}

int cmd_qaoa(const DeviceOptions& opts, std::optional<std::uint64_t> shots, std::optional<std::uint64_t> seed,
             int copies, int p, int max_evals, const std::string& graph_file, const std::string& out) {
  qmp::CampaignConfig cfg = opts.campaign();
  if (!out.empty()) cfg.output = out;
  const auto dev = qmp::resolve_campaign_device(*cfg.device, cfg.noise, cfg.cost);

  qmp::Graph graph = qmp::rectangle_graph();
  if (!graph_file.empty()) {
    std::ifstream in(graph_file, std::ios::binary);
    if (!in) throw qmp::ValidationError("graph", "cannot open '" + graph_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    graph = qmp::parse_edge_list(buf.str());
  }

  qmp::ParallelQaoaOptions options;
  options.copies = copies;
  options.p = p;
  options.optimizer.max_evals = max_evals;
  if (cfg.schedule) options.weights = *cfg.schedule;
  options.shots = shots.value_or(cfg.shots.value_or(default_shots(dev.device)));
  if (seed) {
    options.seed = *seed;
  } else if (cfg.seeds && !cfg.seeds->empty()) {
    options.seed = cfg.seeds->front();
  } else {
    throw qmp::ValidationError("seed", "an explicit seed is required");
  }

  const qmp::ParallelQaoaReport report = qmp::run_parallel_qaoa(dev.device, dev.noise, graph, options);
  const fs::path dir = cfg.output.value_or(default_output_dir());
  ensure_directory(dir);
  qmp::emit_report(report, qmp::ReportFormat::Structured, dir / "qaoa_report.json");
  qmp::emit_report(report, qmp::ReportFormat::Csv, dir / "qaoa_report.csv");

  std::cout << "device=" << dev.device.name << " copies=" << copies << " shots=" << options.shots
            << " ideal_expectation=" << qmp::format_double(report.ideal_expectation) << "\n";
  for (std::size_t i = 0; i < report.copies.size(); ++i) {
    std::cout << "copy=" << i << " modal=" << report.copies[i].modal
              << " success_mass=" << qmp::format_double(report.copies[i].success_mass) << "\n";
  }
  std::cout << "standalone modal=" << report.standalone.modal
            << " success_mass=" << qmp::format_double(report.standalone.success_mass) << "\n"
            << "cost_savings=" << qmp::format_double(report.cost.savings) << "\n"
            << "wrote " << (dir / "qaoa_report.json").string() << " and " << (dir / "qaoa_report.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-programming compiler, noisy simulator and benchmark harness"};
  app.require_subcommand(1);

  std::string file, out, basis, device_name, seeds, pairing, manifest, graph_file;
  std::vector<std::string> files;
  std::optional<std::uint64_t> shots, seed_opt;
  std::uint64_t seed = 1;
  bool verify = false, noiseless = false;
  int copies = 2, layers = 1, max_evals = 200;
  DeviceOptions dev;

  auto* stats = app.add_subcommand("stats", "print circuit statistics");
  stats->add_option("file", file, "QASM file")->required()->check(CLI::ExistingFile);

  auto* rebase = app.add_subcommand("rebase", "rewrite a circuit into a native gate set");
  rebase->add_option("file", file, "QASM file")->required()->check(CLI::ExistingFile);
  rebase->add_option("--basis", basis, "superconducting or trappedion");
  rebase->add_option("--device", device_name, "take the basis from this device");
  rebase->add_flag("--verify", verify, "check unitary equivalence of the result");
  rebase->add_option("-o,--out", out, "output file (default stdout)");

  auto* allocate = app.add_subcommand("allocate", "allocate partitions for one or more programs");
  allocate->add_option("files", files, "QASM files")->required()->check(CLI::ExistingFile);
  dev.add_to(allocate, true);
  allocate->add_option("-o,--out", out, "output file (default stdout)");

  auto* simulate = app.add_subcommand("simulate", "compile and sample programs as one job");
  simulate->add_option("files", files, "QASM files")->required()->check(CLI::ExistingFile);
  dev.add_to(simulate, true);
  simulate->add_option("--shots", shots, "shots (default: 8192 superconducting, 100 trapped-ion)");
  simulate->add_option("--seed", seed, "sampling seed");
  simulate->add_flag("--noiseless", noiseless, "disable all noise");
  simulate->add_option("-o,--out", out, "output file (default stdout)");

  auto* suite = app.add_subcommand("suite", "standalone vs simultaneous benchmark campaign");
  dev.add_to(suite, true);
  suite->add_option("--shots", shots, "shots per run");
  suite->add_option("--seeds", seeds, "seed list: 1..20 or 1,2,3");
  suite->add_option("--pairing", pairing, "benchmark pairs: 1:2,3:4");
  suite->add_option("--manifest", manifest, "benchmark manifest")->check(CLI::ExistingFile);
  suite->add_option("--out", out, std::string("output directory (default $") + kOutputDirEnv + " or qmprog-out)");

  auto* qaoa = app.add_subcommand("qaoa", "parallel Max-Cut QAOA");
  dev.add_to(qaoa, true);
  qaoa->add_option("--shots", shots, "shots per run");
  qaoa->add_option("--seed", seed_opt, "sampling seed");
  qaoa->add_option("--copies", copies, "ansatz copies run simultaneously")->check(CLI::PositiveNumber);
  qaoa->add_option("--p", layers, "QAOA layers")->check(CLI::PositiveNumber);
  qaoa->add_option("--max-evals", max_evals, "optimizer evaluation budget");
  qaoa->add_option("--graph", graph_file, "edge-list graph (default: 4-cycle)")->check(CLI::ExistingFile);
  qaoa->add_option("--out", out, std::string("output directory (default $") + kOutputDirEnv + " or qmprog-out)");

  auto* cost = app.add_subcommand("cost", "credits for standalone and merged submission");
  cost->add_option("files", files, "QASM files")->required()->check(CLI::ExistingFile);
  dev.add_to(cost, true);
  cost->add_option("--shots", shots, "shots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*stats) return cmd_stats(file);
    if (*rebase) return cmd_rebase(file, basis, device_name, verify, out);
    if (*allocate) return cmd_allocate(files, dev, out);
    if (*simulate) return cmd_simulate(files, dev, shots, seed, noiseless, out);
    if (*suite) return cmd_suite(dev, shots, seeds, pairing, manifest, out);
    if (*qaoa) return cmd_qaoa(dev, shots, seed_opt, copies, layers, max_evals, graph_file, out);
    if (*cost) return cmd_cost(files, dev, shots);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
