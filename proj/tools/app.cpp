// Copyright 2026 The qansatz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "qansatz/analysis.hpp"
#include "qansatz/circuit_io.hpp"
#include "qansatz/errors.hpp"
#include "qansatz/expressibility.hpp"
#include "qansatz/ga.hpp"
#include "qansatz/hamiltonian.hpp"
#include "qansatz/report.hpp"
#include "qansatz/vqe.hpp"

#ifndef QANSATZ_VERSION
#define QANSATZ_VERSION "0.0.0"
#endif

namespace qansatz::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

/// Raised for bad flags or configuration; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string out_dir = ".";
};

struct HamiltonianOptions {
  std::string path;
  bool tfim = false;
  int qubits = 4;
  double coupling = 1.0;
  double field = -0.5;
};

/// Collects artifacts of one command and writes the manifest last.
class Session {
 public:
  Session(std::string command, const GlobalOptions& global)
      : command_(std::move(command)), out_dir_(global.out_dir), started_(Clock::now()) {
    if (global.seed) {
      seed_ = *global.seed;
    } else {
      std::random_device rd;
      seed_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
      seed_source_ = "entropy";
    }
  }

  std::uint64_t seed() const { return seed_; }
  json& config() { return config_; }

  fs::path write(const std::string& name, std::string_view contents) {
    const fs::path path = out_dir_ / name;
    write_file_atomic(path, contents);
    artifacts_.push_back(path.string());
    return path;
  }

  void finish() {
    json manifest;
    manifest["command"] = command_;
    manifest["config"] = config_;
    manifest["master_seed"] = seed_;
    manifest["seed_source"] = seed_source_;
    manifest["artifacts"] = artifacts_;
    manifest["tool_version"] = QANSATZ_VERSION;
    manifest["wall_time_s"] =
        std::chrono::duration<double>(Clock::now() - started_).count();
    write_file_atomic(out_dir_ / (command_ + ".manifest.json"), manifest.dump(2) + "\n");
  }

 private:
  std::string command_;
  fs::path out_dir_;
  Clock::time_point started_;
  std::uint64_t seed_ = 0;
  std::string seed_source_ = "flag";
  json config_ = json::object();
  std::vector<std::string> artifacts_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

void add_hamiltonian_options(CLI::App* cmd, HamiltonianOptions& opts) {
  // `-h` would clash with the TFIM field flag.
  cmd->set_help_flag("--help", "Print this help message and exit");
  cmd->add_option("--hamiltonian", opts.path, "Hamiltonian JSON file");
  cmd->add_flag("--tfim", opts.tfim, "Use an open-chain transverse-field Ising model");
  cmd->add_option("--qubits", opts.qubits, "TFIM chain length");
  cmd->add_option("--J", opts.coupling, "TFIM coupling J");
  cmd->add_option("--h", opts.field, "TFIM transverse field h");
}

PauliHamiltonian resolve_hamiltonian(const HamiltonianOptions& opts, json& config) {
  if (opts.tfim == !opts.path.empty()) {
    throw UsageError("give exactly one of --hamiltonian FILE or --tfim");
  }
  if (opts.tfim) {
    if (opts.qubits < 2) throw UsageError("--qubits must be ≥ 2 for --tfim");
    config["hamiltonian"] = {{"type", "tfim"}, {"qubits", opts.qubits}, {"J", opts.coupling},
                             {"h", opts.field}};
    return tfim(opts.qubits, opts.coupling, opts.field);
  }
  if (!fs::exists(opts.path)) throw UsageError("Hamiltonian file not found: " + opts.path);
  config["hamiltonian"] = {{"type", "file"}, {"path", opts.path}};
  return load_hamiltonian(opts.path);
}

CircuitFile resolve_circuit(const std::string& path, json& config) {
  if (!fs::exists(path)) throw UsageError("circuit file not found: " + path);
  config["circuit"] = path;
  return load_circuit(path);
}

void require_matching_qubits(const CircuitGenome& genome, const PauliHamiltonian& h) {
  if (genome.n_qubits() != h.n_qubits()) {
    throw UsageError("circuit has " + std::to_string(genome.n_qubits()) +
                     " qubits but the Hamiltonian has " + std::to_string(h.n_qubits()));
  }
}

/// "16" or an inclusive range "1..24".
std::vector<int> parse_depths(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("invalid --depth value '" + text + "'");
    }
  };
  std::vector<int> depths;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    depths.push_back(to_int(text));
  } else {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty depth range '" + text + "'");
    for (int d = lo; d <= hi; ++d) depths.push_back(d);
  }
  for (const int d : depths) {
    if (d < 1) throw UsageError("depth must be ≥ 1");
  }
  return depths;
}

// ---------------------------------------------------------------------------
// evolve

struct EvolveOptions {
  std::string config_file;
  std::string gate_set = "A";
  std::string depth = "16";
  GAConfig ga;
};

json config_to_json(const GAConfig& c, const GateSet& gs) {
  return {{"gate_set", gs.spec()},       {"qubits", c.n_qubits},
          {"depth", c.depth},            {"population", c.population},
          {"generations", c.generations}, {"parents", c.parents},
          {"mutation", c.mutation_prob}, {"samples", c.samples},
          {"bins", c.bins},              {"crossover_points", c.crossover_points},
          {"seed", c.master_seed}};
}

/// Applies a JSON config file; only keys present in the file are used and
/// explicit command-line flags win.
void apply_config_file(CLI::App* cmd, EvolveOptions& opts, GlobalOptions& global) {
  if (opts.config_file.empty()) return;
  if (!fs::exists(opts.config_file)) throw UsageError("config file not found: " + opts.config_file);
  json doc;
  try {
    doc = json::parse(read_file(opts.config_file));
  } catch (const json::exception& e) {
    throw UsageError(opts.config_file + ": " + e.what());
  }
  if (!doc.is_object()) throw UsageError(opts.config_file + ": expected a JSON object");
  auto take = [&](const char* key, const char* flag, auto& field) {
    if (!doc.contains(key) || cmd->count(flag) > 0) return;
    try {
      doc[key].get_to(field);
    } catch (const json::exception&) {
      throw UsageError(opts.config_file + ": bad value for \"" + key + "\"");
    }
  };
  take("gate_set", "--gate-set", opts.gate_set);
  take("qubits", "--qubits", opts.ga.n_qubits);
  if (doc.contains("depth") && cmd->count("--depth") == 0) {
    opts.depth = doc["depth"].is_string() ? doc["depth"].get<std::string>()
                                          : std::to_string(doc["depth"].get<int>());
  }
  take("population", "--population", opts.ga.population);
  take("generations", "--generations", opts.ga.generations);
  take("parents", "--parents", opts.ga.parents);
  take("mutation", "--mutation", opts.ga.mutation_prob);
  take("samples", "--samples", opts.ga.samples);
  take("bins", "--bins", opts.ga.bins);
  take("crossover_points", "--crossover-points", opts.ga.crossover_points);
  if (doc.contains("seed") && !global.seed) {
    if (!doc["seed"].is_number_unsigned()) throw UsageError(opts.config_file + ": bad value for \"seed\"");
    global.seed = doc["seed"].get<std::uint64_t>();
  }
}

int cmd_evolve(CLI::App* cmd, EvolveOptions& opts, GlobalOptions global) {
  apply_config_file(cmd, opts, global);
  Session session("evolve", global);
  opts.ga.master_seed = session.seed();
  const GateSet gs = GateSet::parse(opts.gate_set);
  const std::vector<int> depths = parse_depths(opts.depth);
  opts.ga.threads = global.threads;
  for (const int d : depths) {
    GAConfig c = opts.ga;
    c.depth = d;
    c.crossover_points = d > 1 ? std::min(opts.ga.crossover_points, d - 1) : opts.ga.crossover_points;
    c.validate();
  }

  session.config() = config_to_json(opts.ga, gs);
  session.config()["depth"] = opts.depth;
  const bool sweep = depths.size() > 1;
  CsvTable sweep_table({"depth", "best_jsd", "best_generation", "wall_ms"});
  for (const int d : depths) {
    GAConfig c = opts.ga;
    c.depth = d;
    if (sweep && d > 1) c.crossover_points = std::min(opts.ga.crossover_points, d - 1);
    const auto started = Clock::now();
    const GARunReport report = evolve(c, gs, [&](const GenerationStats& g) {
      std::cerr << "[evolve L=" << d << "] generation " << g.generation << " best "
                << format_double(g.best_jsd) << " running " << format_double(g.running_best)
                << "\n";
    });
    const double wall = std::chrono::duration<double, std::milli>(Clock::now() - started).count();

    CsvTable trace({"generation", "best_jsd", "mean_jsd", "wall_ms"});
    auto add = [&](const GenerationStats& g) {
      trace.row({std::to_string(g.generation), format_double(g.best_jsd),
                 format_double(g.mean_jsd), format_double(g.wall_ms)});
    };
    add(report.initial);
    for (const auto& g : report.generations) add(g);

    const std::string suffix = sweep ? "_L" + std::to_string(d) : "";
    const CircuitProvenance prov{c.master_seed, report.best_generation, report.best_overall_score};
    session.write("circuit" + suffix + ".json", circuit_to_json(report.best_genome, prov));
    session.write("trace" + suffix + ".csv", trace.str());
    sweep_table.row({std::to_string(d), format_double(report.best_overall_score),
                     std::to_string(report.best_generation), format_double(wall)});
    std::cout << "depth " << d << ": best jsd " << format_double(report.best_overall_score)
              << " (generation " << report.best_generation << ")\n";
  }
  if (sweep) session.write("sweep.csv", sweep_table.str());
  session.finish();
  return kExitOk;
}

// ---------------------------------------------------------------------------
// express

struct ExpressOptions {
  std::string circuit;
  int samples = kDefaultSamples;
  int bins = kDefaultBins;
};

int cmd_express(const ExpressOptions& opts, const GlobalOptions& global) {
  Session session("express", global);
  const CircuitFile file = resolve_circuit(opts.circuit, session.config());
  if (opts.bins < 2) throw UsageError("bins must be ≥ 2");
  if (opts.samples < opts.bins) throw UsageError("samples must be ≥ bins");
  session.config()["samples"] = opts.samples;
  session.config()["bins"] = opts.bins;

  Rng rng(session.seed(), Stream::kFidelity);
  const auto fidelities = sample_fidelities(file.genome, opts.samples, rng);
  const FidelityHistogram hist = fidelity_histogram(fidelities, file.genome.n_qubits(), opts.bins);
  const double score = jsd(hist.empirical_prob, hist.haar_prob);

  CsvTable table({"bin_lo", "bin_hi", "empirical_prob", "haar_prob"});
  for (int j = 0; j < hist.bin_count; ++j) {
    const auto k = static_cast<std::size_t>(j);
    table.row({hist.lower_edge(j), hist.upper_edge(j), hist.empirical_prob[k], hist.haar_prob[k]});
  }
  session.write("fidelity_histogram.csv", table.str());
  json report = {{"genome_id", fs::path(opts.circuit).filename().string()},
                 {"n_qubits", file.genome.n_qubits()},
                 {"jsd", score},
                 {"samples", opts.samples},
                 {"bins", opts.bins},
                 {"seed", session.seed()}};
  session.write("express.json", dump(report));
  session.finish();
  std::cout << "expressibility (JSD) " << format_double(score) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// vqe

struct VqeOptions {
  std::string circuit;
  HamiltonianOptions ham;
  VQEConfig vqe;
  std::string init = "stored";
};

int cmd_vqe(const VqeOptions& opts, const GlobalOptions& global) {
  Session session("vqe", global);
  const CircuitFile file = resolve_circuit(opts.circuit, session.config());
  const PauliHamiltonian h = resolve_hamiltonian(opts.ham, session.config());
  require_matching_qubits(file.genome, h);
  VQEConfig cfg = opts.vqe;
  const auto mode = parse_init_mode(opts.init);
  if (!mode) throw UsageError("--init must be stored, random or zeros");
  cfg.init_mode = *mode;
  cfg.seed = session.seed();
  try {
    cfg.validate();
  } catch (const ContractError& e) {
    throw UsageError(e.what());
  }
  session.config()["max_iters"] = cfg.max_iters;
  session.config()["learning_rate"] = cfg.learning_rate;
  session.config()["adam_beta1"] = cfg.adam_beta1;
  session.config()["adam_beta2"] = cfg.adam_beta2;
  session.config()["adam_eps"] = cfg.adam_eps;
  session.config()["init_mode"] = opts.init;
  session.config()["convergence_tol"] = cfg.convergence_tol;

  std::optional<double> reference = h.info().reference_ground_energy;
  std::string reference_source = reference ? "metadata" : "none";
  if (!reference && h.n_qubits() <= 16) {
    reference = ground_energy(h);
    reference_source = "lanczos";
  }
  const VQETrace trace = run_vqe(file.genome, h, cfg, reference);

  CsvTable table({"iteration", "energy", "grad_norm"});
  for (std::size_t k = 0; k < trace.energies.size(); ++k) {
    table.row({std::to_string(k), format_double(trace.energies[k]),
               format_double(trace.grad_norms[k])});
  }
  session.write("vqe_trace.csv", table.str());
  session.write("circuit_trained.json",
                circuit_to_json(file.genome.with_params(trace.final_params), file.provenance));
  json summary = {{"final_energy", trace.final_energy},
                  {"reference_energy", optional_number(trace.reference_energy)},
                  {"reference_source", reference_source},
                  {"error_vs_reference", optional_number(trace.error_vs_reference)},
                  {"iterations_used", trace.iterations_used},
                  {"converged", trace.converged},
                  {"hamiltonian", h.info().name}};
  session.write("vqe_summary.json", dump(summary));
  session.finish();
  std::cout << "final energy " << format_double(trace.final_energy);
  if (trace.error_vs_reference) std::cout << " (error " << format_double(*trace.error_vs_reference) << ")";
  std::cout << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// landscape

struct LandscapeOptions {
  std::string circuit;
  HamiltonianOptions ham;
  std::vector<std::string> pairs;
  int resolution = kDefaultLandscapeResolution;
};

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("--pair expects i,j but got '" + text + "'");
  }
}

int cmd_landscape(const LandscapeOptions& opts, const GlobalOptions& global) {
  Session session("landscape", global);
  const CircuitFile file = resolve_circuit(opts.circuit, session.config());
  const PauliHamiltonian h = resolve_hamiltonian(opts.ham, session.config());
  require_matching_qubits(file.genome, h);
  if (opts.resolution < 2) throw UsageError("--resolution must be ≥ 2");
  const int slots = static_cast<int>(file.genome.param_count());

  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : opts.pairs) pairs.push_back(parse_pair(p));
  if (pairs.empty()) {
    if (slots < 2) throw UsageError("circuit has fewer than two parameters");
    pairs.emplace_back(0, 1);
  }
  for (const auto& [i, j] : pairs) {
    if (i == j || i < 0 || j < 0 || i >= slots || j >= slots) {
      throw UsageError("invalid parameter pair " + std::to_string(i) + "," + std::to_string(j) +
                       " for " + std::to_string(slots) + " parameters");
    }
  }
  session.config()["resolution"] = opts.resolution;

  json manifest_pairs = json::array();
  std::vector<double> axis;
  for (const auto& [i, j] : pairs) {
    const LandscapeGrid grid = landscape_scan(file.genome, h, i, j, opts.resolution,
                                              file.genome.params(), global.threads);
    axis = grid.axis;
    std::vector<std::string> header;
    for (int b = 0; b < opts.resolution; ++b) header.push_back("j" + std::to_string(b));
    CsvTable table(header);
    for (const auto& row : grid.energies) {
      std::vector<std::string> cells;
      for (const double e : row) cells.push_back(format_double(e));
      table.row(std::move(cells));
    }
    const std::string name = "landscape_" + std::to_string(i) + "_" + std::to_string(j) + ".csv";
    session.write(name, table.str());
    manifest_pairs.push_back({{"param_i", i}, {"param_j", j}, {"file", name}});
  }
  json index = {{"rows", "param_i at axis[a]"},
                {"columns", "param_j at axis[b]"},
                {"axis", axis},
                {"base_params", file.genome.params()},
                {"pairs", manifest_pairs}};
  session.write("landscape.json", dump(index));
  session.finish();
  std::cout << "wrote " << pairs.size() << " landscape(s)\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gradvar

struct GradvarOptions {
  std::string circuit;
  HamiltonianOptions ham;
  int samples = 200;
  double threshold = kFlatVarianceThreshold;
};

int cmd_gradvar(const GradvarOptions& opts, const GlobalOptions& global) {
  Session session("gradvar", global);
  const CircuitFile file = resolve_circuit(opts.circuit, session.config());
  const PauliHamiltonian h = resolve_hamiltonian(opts.ham, session.config());
  require_matching_qubits(file.genome, h);
  if (opts.samples < 2) throw UsageError("--samples must be ≥ 2");
  session.config()["samples"] = opts.samples;
  session.config()["threshold"] = opts.threshold;

  const GradientStats stats =
      gradient_variance(file.genome, h, opts.samples, session.seed(), opts.threshold, global.threads);
  json report = {{"sample_count", stats.sample_count},
                 {"threshold", stats.threshold},
                 {"param_count", file.genome.param_count()},
                 {"per_param_mean", stats.per_param_mean},
                 {"per_param_variance", stats.per_param_variance},
                 {"flat_slots", stats.flat_slots},
                 {"seed", session.seed()}};
  session.write("gradvar.json", dump(report));
  session.finish();
  std::cout << stats.flat_slots.size() << " of " << file.genome.param_count()
            << " parameters flat\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// ground

struct GroundOptions {
  HamiltonianOptions ham;
  double tol = 1e-8;
};

int cmd_ground(const GroundOptions& opts, const GlobalOptions& global) {
  Session session("ground", global);
  const PauliHamiltonian h = resolve_hamiltonian(opts.ham, session.config());
  session.config()["tol"] = opts.tol;
  LanczosOptions lo;
  lo.tol = opts.tol;
  const LanczosResult result = lanczos_ground(h, lo);
  json report = {{"hamiltonian", h.info().name},
                 {"n_qubits", h.n_qubits()},
                 {"terms", h.terms().size()},
                 {"energy", result.energy},
                 {"method", "lanczos"},
                 {"iterations", result.iterations},
                 {"residual", result.residual},
                 {"reference_ground_energy", optional_number(h.info().reference_ground_energy)}};
  if (h.n_qubits() <= 8) report["dense_energy"] = ground_energy_dense(h);
  session.write("ground.json", dump(report));
  session.finish();
  std::cout << "ground energy " << format_double(result.energy) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// counts

int cmd_counts(const std::string& circuit, const GlobalOptions& global) {
  Session session("counts", global);
  const CircuitFile file = resolve_circuit(circuit, session.config());
  const GateCount c = gate_counts(file.genome);
  json report = {{"parameterized", c.parameterized},
                 {"non_parameterized", c.non_parameterized},
                 {"total", c.total},
                 {"depth", file.genome.depth()},
                 {"convention",
                  "identity gates count as non-parameterized; a CNOT counts once; "
                  "the implicit initial Hadamard layer is excluded"}};
  session.write("counts.json", dump(report));
  session.finish();
  std::cout << "P " << c.parameterized << " NP " << c.non_parameterized << " T " << c.total << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Genetic search for expressible ansatz circuits and VQE benchmarking", "qansatz"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QANSATZ_VERSION);

  GlobalOptions global;
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "Master seed (drawn from entropy when unset)");
  app.add_option("--threads", global.threads, "Worker threads (0 = one per core)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out-dir", global.out_dir, "Directory for reports and artifacts");

  EvolveOptions evolve_opts;
  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a maximally expressible circuit");
  evolve_cmd->add_option("--config", evolve_opts.config_file, "JSON file with GA settings");
  evolve_cmd->add_option("--gate-set", evolve_opts.gate_set, "Gate set A-I or custom list (e.g. RX,RY,H,CNOT*)");
  evolve_cmd->add_option("--qubits", evolve_opts.ga.n_qubits, "Qubit count");
  evolve_cmd->add_option("--depth", evolve_opts.depth, "Layer count, or a sweep range like 1..24");
  evolve_cmd->add_option("--population", evolve_opts.ga.population, "Population size P");
  evolve_cmd->add_option("--generations", evolve_opts.ga.generations, "Generations G");
  evolve_cmd->add_option("--parents", evolve_opts.ga.parents, "Parents kept per generation k");
  evolve_cmd->add_option("--mutation", evolve_opts.ga.mutation_prob, "Per-gate mutation probability");
  evolve_cmd->add_option("--samples", evolve_opts.ga.samples, "Fidelity pairs per evaluation");
  evolve_cmd->add_option("--bins", evolve_opts.ga.bins, "Histogram bins");
  evolve_cmd->add_option("--crossover-points", evolve_opts.ga.crossover_points, "Crossover points N");

  ExpressOptions express_opts;
  auto* express_cmd = app.add_subcommand("express", "Score the expressibility of a circuit file");
  express_cmd->add_option("--circuit", express_opts.circuit, "Circuit JSON file")->required();
  express_cmd->add_option("--samples", express_opts.samples, "Fidelity pairs");
  express_cmd->add_option("--bins", express_opts.bins, "Histogram bins");

  VqeOptions vqe_opts;
  auto* vqe_cmd = app.add_subcommand("vqe", "Optimize a circuit's parameters against a Hamiltonian");
  vqe_cmd->add_option("--circuit", vqe_opts.circuit, "Circuit JSON file")->required();
  add_hamiltonian_options(vqe_cmd, vqe_opts.ham);
  vqe_cmd->add_option("--iters", vqe_opts.vqe.max_iters, "Maximum Adam iterations");
  vqe_cmd->add_option("--lr", vqe_opts.vqe.learning_rate, "Adam learning rate");
  vqe_cmd->add_option("--beta1", vqe_opts.vqe.adam_beta1, "Adam beta1");
  vqe_cmd->add_option("--beta2", vqe_opts.vqe.adam_beta2, "Adam beta2");
  vqe_cmd->add_option("--eps", vqe_opts.vqe.adam_eps, "Adam epsilon");
  vqe_cmd->add_option("--tol", vqe_opts.vqe.convergence_tol, "Energy-change convergence threshold");
  vqe_cmd->add_option("--init", vqe_opts.init, "Initial parameters: stored, random or zeros");

  LandscapeOptions landscape_opts;
  auto* landscape_cmd = app.add_subcommand("landscape", "Scan the energy over two parameters");
  landscape_cmd->add_option("--circuit", landscape_opts.circuit, "Circuit JSON file")->required();
  add_hamiltonian_options(landscape_cmd, landscape_opts.ham);
  landscape_cmd->add_option("--pair", landscape_opts.pairs, "Parameter slots i,j (repeatable)");
  landscape_cmd->add_option("--resolution", landscape_opts.resolution, "Grid points per axis");

  GradvarOptions gradvar_opts;
  auto* gradvar_cmd = app.add_subcommand("gradvar", "Per-parameter gradient variance (barren plateau probe)");
  gradvar_cmd->add_option("--circuit", gradvar_opts.circuit, "Circuit JSON file")->required();
  add_hamiltonian_options(gradvar_cmd, gradvar_opts.ham);
  gradvar_cmd->add_option("--samples", gradvar_opts.samples, "Random parameter draws");
  gradvar_cmd->add_option("--threshold", gradvar_opts.threshold, "Variance below which a slot is flat");

  GroundOptions ground_opts;
  auto* ground_cmd = app.add_subcommand("ground", "Exact ground-state energy");
  add_hamiltonian_options(ground_cmd, ground_opts.ham);
  ground_cmd->add_option("--tol", ground_opts.tol, "Lanczos residual tolerance");

  std::string counts_circuit;
  auto* counts_cmd = app.add_subcommand("counts", "Gate counts of a circuit file");
  counts_cmd->add_option("--circuit", counts_circuit, "Circuit JSON file")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (seed_opt->count() > 0) global.seed = seed_value;

  try {
    if (*evolve_cmd) return cmd_evolve(evolve_cmd, evolve_opts, global);
    if (*express_cmd) return cmd_express(express_opts, global);
    if (*vqe_cmd) return cmd_vqe(vqe_opts, global);
    if (*landscape_cmd) return cmd_landscape(landscape_opts, global);
    if (*gradvar_cmd) return cmd_gradvar(gradvar_opts, global);
    if (*ground_cmd) return cmd_ground(ground_opts, global);
    if (*counts_cmd) return cmd_counts(counts_circuit, global);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"qansatz"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace qansatz::cli
