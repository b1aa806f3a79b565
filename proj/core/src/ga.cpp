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

#include "qansatz/ga.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <string>

#include "qansatz/errors.hpp"
#include "qansatz/parallel.hpp"

namespace qansatz {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::vector<double> fresh_angles(std::size_t count, Rng& rng) {
  std::vector<double> out(count);
  for (auto& a : out) a = rng.angle();
  return out;
}

void require_compatible(const CircuitGenome& a, const CircuitGenome& b) {
  if (a.n_qubits() != b.n_qubits() || a.depth() != b.depth() || a.gate_set() != b.gate_set()) {
    throw ContractError("crossover parents differ in qubit count, depth or gate set");
  }
}

GenerationStats summarize(int generation, std::span<const double> scores, double running_best,
                          double wall_ms) {
  GenerationStats s;
  s.generation = generation;
  s.best_jsd = *std::min_element(scores.begin(), scores.end());
  s.mean_jsd = std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
  s.running_best = std::min(running_best, s.best_jsd);
  s.wall_ms = wall_ms;
  return s;
}

}  // namespace

void GAConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ContractError(msg); };
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    fail("qubits must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
  if (depth < 1) fail("depth must be ≥ 1");
  if (population < 1) fail("population must be ≥ 1");
  if (generations < 0) fail("generations must be ≥ 0");
  if (parents < 1 || parents > population) fail("parents must be in [1, population]");
  if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) fail("mutation probability must be in [0, 1]");
  if (bins < 2) fail("bins must be ≥ 2");
  if (samples < bins) fail("samples must be ≥ bins");
  if (crossover_points < 1) fail("crossover points must be ≥ 1");
  if (depth > 1 && crossover_points >= depth) fail("crossover points must be < depth");
}

std::vector<double> GARunReport::best_score_per_generation() const {
  std::vector<double> out;
  out.reserve(generations.size());
  for (const auto& g : generations) out.push_back(g.best_jsd);
  return out;
}

std::vector<double> GARunReport::running_best_per_generation() const {
  std::vector<double> out;
  out.reserve(generations.size());
  for (const auto& g : generations) out.push_back(g.running_best);
  return out;
}

CircuitGenome random_genome(const GateSet& gate_set, int n_qubits, int depth, Rng& rng) {
  if (n_qubits < 1) throw ContractError("random genome needs at least one qubit");
  if (depth < 0) throw ContractError("depth must be non-negative");
  const auto n = static_cast<std::size_t>(n_qubits);
  std::vector<Layer> layers(static_cast<std::size_t>(depth));
  std::vector<int> partners;
  for (Layer& layer : layers) {
    std::vector<bool> used(n, false);
    for (int q = 0; q < n_qubits; ++q) {
      if (used[static_cast<std::size_t>(q)]) continue;
      // Qubits below q are already occupied, so partners lie above it.
      partners.clear();
      for (int p = q + 1; p < n_qubits; ++p) {
        if (used[static_cast<std::size_t>(p)]) continue;
        if (gate_set.cnot_adjacent_only && p != q + 1) break;
        partners.push_back(p);
      }
      const std::size_t options = gate_set.single_qubit_gates.size() + (partners.empty() ? 0 : 1);
      const std::size_t pick = rng.index(options);
      used[static_cast<std::size_t>(q)] = true;
      if (pick < gate_set.single_qubit_gates.size()) {
        layer.push_back(Gate::single(gate_set.single_qubit_gates[pick], q));
        continue;
      }
      const int partner = partners[rng.index(partners.size())];
      used[static_cast<std::size_t>(partner)] = true;
      layer.push_back(rng.bernoulli(0.5) ? Gate::cnot(q, partner) : Gate::cnot(partner, q));
    }
  }
  const std::size_t slots = assign_param_slots(layers);
  return CircuitGenome(n_qubits, gate_set, std::move(layers), fresh_angles(slots, rng));
}

std::vector<double> evaluate_population(std::span<const CircuitGenome> population,
                                        const GAConfig& cfg) {
  if (population.empty()) throw ContractError("cannot evaluate an empty population");
  std::vector<double> scores(population.size());
  parallel_for(population.size(), cfg.threads, [&](std::size_t i) {
    scores[i] =
        expressibility(population[i], cfg.samples, cfg.bins, derive_seed(cfg.master_seed, i)).jsd;
  });
  return scores;
}

std::vector<std::size_t> select_parents(std::span<const double> scores, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > scores.size()) {
    throw ContractError("cannot select " + std::to_string(k) + " parents from " +
                        std::to_string(scores.size()));
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  order.resize(static_cast<std::size_t>(k));
  return order;
}

CircuitGenome crossover_at(const CircuitGenome& p1, const CircuitGenome& p2,
                           std::span<const int> cuts, Rng& rng) {
  require_compatible(p1, p2);
  const int depth = p1.depth();
  int previous = 0;
  for (const int c : cuts) {
    if (c <= previous || c >= depth) {
      throw ContractError("crossover cuts must be strictly increasing within [1, depth-1]");
    }
    previous = c;
  }
  std::vector<Layer> layers;
  layers.reserve(static_cast<std::size_t>(depth));
  std::size_t next_cut = 0;
  bool from_first = true;
  for (int l = 0; l < depth; ++l) {
    if (next_cut < cuts.size() && l == cuts[next_cut]) {
      from_first = !from_first;
      ++next_cut;
    }
    layers.push_back((from_first ? p1 : p2).layers()[static_cast<std::size_t>(l)]);
  }
  const std::size_t slots = assign_param_slots(layers);
  return CircuitGenome(p1.n_qubits(), p1.gate_set(), std::move(layers), fresh_angles(slots, rng));
}

CircuitGenome crossover(const CircuitGenome& p1, const CircuitGenome& p2, int points, Rng& rng) {
  require_compatible(p1, p2);
  const int depth = p1.depth();
  if (points < 1 || points >= depth) {
    throw ContractError("crossover needs 1 <= points < depth (points=" + std::to_string(points) +
                        ", depth=" + std::to_string(depth) + ")");
  }
  std::vector<int> candidates(static_cast<std::size_t>(depth - 1));
  std::iota(candidates.begin(), candidates.end(), 1);
  for (int i = 0; i < points; ++i) {
    const std::size_t j = static_cast<std::size_t>(i) + rng.index(candidates.size() - static_cast<std::size_t>(i));
    std::swap(candidates[static_cast<std::size_t>(i)], candidates[j]);
  }
  candidates.resize(static_cast<std::size_t>(points));
  std::sort(candidates.begin(), candidates.end());
  return crossover_at(p1, p2, candidates, rng);
}

CircuitGenome mutate(const CircuitGenome& genome, double m, Rng& rng) {
  if (!(m >= 0.0 && m <= 1.0)) throw ContractError("mutation probability must be in [0, 1]");
  const auto& singles = genome.gate_set().single_qubit_gates;
  std::vector<Layer> layers = genome.layers();
  std::vector<GateKind> alternatives;
  for (Layer& layer : layers) {
    for (Gate& g : layer) {
      if (!rng.bernoulli(m)) continue;
      if (g.kind == GateKind::CNOT) {
        std::swap(*g.control, g.target);
        continue;
      }
      alternatives.clear();
      for (const GateKind k : singles) {
        if (k != g.kind) alternatives.push_back(k);
      }
      if (alternatives.empty()) continue;
      g.kind = alternatives[rng.index(alternatives.size())];
      g.param_slot.reset();  // marks "needs a fresh angle"
    }
  }
  // Rebuild slot numbering; surviving rotations keep their stored angle.
  const auto& old = genome.params();
  std::vector<double> params;
  int next = 0;
  for (Layer& layer : layers) {
    std::stable_sort(layer.begin(), layer.end(),
                     [](const Gate& a, const Gate& b) { return a.target < b.target; });
    for (Gate& g : layer) {
      if (!is_parameterized(g.kind)) {
        g.param_slot.reset();
        continue;
      }
      params.push_back(g.param_slot ? old[static_cast<std::size_t>(*g.param_slot)] : rng.angle());
      g.param_slot = next++;
    }
  }
  return CircuitGenome(genome.n_qubits(), genome.gate_set(), std::move(layers), std::move(params));
}

GARunReport evolve(const GAConfig& cfg, const GateSet& gate_set,
                   const GenerationCallback& on_generation) {
  cfg.validate();
  Rng rng(cfg.master_seed, Stream::kEvolution);
  const auto population_size = static_cast<std::size_t>(cfg.population);

  auto started = Clock::now();
  std::vector<CircuitGenome> population;
  population.reserve(population_size);
  for (std::size_t i = 0; i < population_size; ++i) {
    population.push_back(random_genome(gate_set, cfg.n_qubits, cfg.depth, rng));
  }
  std::vector<double> scores = evaluate_population(population, cfg);

  auto best_index = static_cast<std::size_t>(
      std::min_element(scores.begin(), scores.end()) - scores.begin());
  GARunReport report{population[best_index], scores[best_index], 0,
                     summarize(0, scores, std::numeric_limits<double>::infinity(), elapsed_ms(started)),
                     {}};
  if (on_generation) on_generation(report.initial);

  const int effective_points = std::min(cfg.crossover_points, cfg.depth - 1);
  for (int gen = 1; gen <= cfg.generations; ++gen) {
    started = Clock::now();
    const auto parents = select_parents(scores, cfg.parents);
    std::vector<CircuitGenome> offspring;
    offspring.reserve(population_size);
    for (std::size_t c = 0; c < population_size; ++c) {
      std::size_t a = 0;
      std::size_t b = 0;
      if (parents.size() > 1) {
        a = rng.index(parents.size());
        b = rng.index(parents.size() - 1);
        if (b >= a) ++b;
      }
      const CircuitGenome& p1 = population[parents[a]];
      const CircuitGenome& p2 = population[parents[b]];
      CircuitGenome child =
          effective_points > 0 ? crossover(p1, p2, effective_points, rng)
                               : p1.with_params(fresh_angles(p1.param_count(), rng));
      offspring.push_back(mutate(child, cfg.mutation_prob, rng));
    }
    population = std::move(offspring);
    scores = evaluate_population(population, cfg);

    best_index = static_cast<std::size_t>(
        std::min_element(scores.begin(), scores.end()) - scores.begin());
    if (scores[best_index] < report.best_overall_score) {
      report.best_overall_score = scores[best_index];
      report.best_genome = population[best_index];
      report.best_generation = gen;
    }
    const double previous_best =
        report.generations.empty() ? report.initial.running_best : report.generations.back().running_best;
    report.generations.push_back(summarize(gen, scores, previous_best, elapsed_ms(started)));
    if (on_generation) on_generation(report.generations.back());
  }
  return report;
}

}  // namespace qansatz
