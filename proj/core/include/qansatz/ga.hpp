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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qansatz/circuit.hpp"
#include "qansatz/expressibility.hpp"
#include "qansatz/rng.hpp"

namespace qansatz {

struct GAConfig {
  int n_qubits = 4;
  int depth = 16;
  int population = 30;
  int generations = 10;
  int parents = 5;
  double mutation_prob = 0.1;
  int samples = kDefaultSamples;
  int bins = kDefaultBins;
  int crossover_points = 1;
  std::uint64_t master_seed = 0;
  int threads = 0;  // 0: one worker per core

  /// ContractError describing the first invalid field.
  void validate() const;
};

struct GenerationStats {
  int generation = 0;  // 0 is the initial population
  double best_jsd = 0.0;
  double mean_jsd = 0.0;
  double running_best = 0.0;
  double wall_ms = 0.0;
};

struct GARunReport {
  CircuitGenome best_genome;
  double best_overall_score = 0.0;
  int best_generation = 0;
  GenerationStats initial;
  std::vector<GenerationStats> generations;  // one entry per offspring generation

  std::vector<double> best_score_per_generation() const;
  std::vector<double> running_best_per_generation() const;
};

/// L layers; each layer scans qubits in ascending order and gives every free
/// qubit a gate drawn uniformly from the set's single-qubit gates plus CNOT
/// (CNOT only when a legal free partner exists; the partner and orientation
/// are then drawn uniformly). Stored parameters are uniform on [0, 2π).
CircuitGenome random_genome(const GateSet& gate_set, int n_qubits, int depth, Rng& rng);

/// Expressibility of every genome, genome i using seed derive_seed(master, i).
/// Order is preserved; evaluation runs on cfg.threads workers.
std::vector<double> evaluate_population(std::span<const CircuitGenome> population,
                                        const GAConfig& cfg);

/// Indices of the k lowest scores, ascending, ties by lower index.
std::vector<std::size_t> select_parents(std::span<const double> scores, int k);

/// Child made of alternating segments p1, p2, p1, ... split after each layer
/// index in `cuts` (1-based counts of leading layers, strictly increasing,
/// each in [1, L-1]). Parameters are resampled.
CircuitGenome crossover_at(const CircuitGenome& p1, const CircuitGenome& p2,
                           std::span<const int> cuts, Rng& rng);

/// N distinct cut points drawn without replacement, then crossover_at.
CircuitGenome crossover(const CircuitGenome& p1, const CircuitGenome& p2, int points, Rng& rng);

/// Each gate mutates independently with probability m: a single-qubit gate
/// becomes a different single-qubit gate of the set (fresh angle when it is a
/// rotation), a CNOT swaps control and target. Unchanged rotations keep their
/// stored angle.
CircuitGenome mutate(const CircuitGenome& genome, double m, Rng& rng);

using GenerationCallback = std::function<void(const GenerationStats&)>;

/// Generational GA without elitism: evaluate, keep the k best as parents,
/// breed P children by crossover of a uniformly drawn distinct parent pair
/// plus mutation, replace the population, repeat G times. Returns the best
/// genome seen in any generation including the initial one.
GARunReport evolve(const GAConfig& cfg, const GateSet& gate_set,
                   const GenerationCallback& on_generation = {});

}  // namespace qansatz
