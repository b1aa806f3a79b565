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

#include "qansatz/analysis.hpp"

#include <numbers>
#include <string>

#include "qansatz/errors.hpp"
#include "qansatz/parallel.hpp"
#include "qansatz/rng.hpp"
#include "qansatz/vqe.hpp"

namespace qansatz {

LandscapeGrid landscape_scan(const CircuitGenome& genome, const PauliHamiltonian& h, int param_i,
                             int param_j, int resolution, std::span<const double> base_params,
                             int threads) {
  const auto slots = static_cast<int>(genome.param_count());
  if (param_i == param_j) throw ContractError("landscape needs two distinct slots");
  if (param_i < 0 || param_i >= slots || param_j < 0 || param_j >= slots) {
    throw ContractError("landscape slots " + std::to_string(param_i) + "," +
                        std::to_string(param_j) + " out of range for " + std::to_string(slots) +
                        " parameters");
  }
  if (resolution < 2) throw ContractError("landscape resolution must be ≥ 2");
  if (base_params.size() != genome.param_count()) {
    throw StructuralError("base parameter vector has wrong length");
  }

  LandscapeGrid grid;
  grid.param_i = param_i;
  grid.param_j = param_j;
  grid.base_params.assign(base_params.begin(), base_params.end());
  grid.axis.resize(static_cast<std::size_t>(resolution));
  for (int a = 0; a < resolution; ++a) {
    grid.axis[static_cast<std::size_t>(a)] = 2.0 * std::numbers::pi * a / (resolution - 1);
  }
  grid.energies.assign(static_cast<std::size_t>(resolution),
                       std::vector<double>(static_cast<std::size_t>(resolution)));
  parallel_for(static_cast<std::size_t>(resolution), threads, [&](std::size_t a) {
    std::vector<double> theta = grid.base_params;
    theta[static_cast<std::size_t>(param_i)] = grid.axis[a];
    for (std::size_t b = 0; b < grid.axis.size(); ++b) {
      theta[static_cast<std::size_t>(param_j)] = grid.axis[b];
      grid.energies[a][b] = energy(genome, theta, h);
    }
  });
  return grid;
}

GradientStats gradient_variance(const CircuitGenome& genome, const PauliHamiltonian& h,
                                int samples, std::uint64_t seed, double threshold, int threads) {
  if (samples < 2) throw ContractError("gradient variance needs at least 2 samples");
  const std::size_t p = genome.param_count();
  GradientStats stats;
  stats.sample_count = samples;
  stats.threshold = threshold;
  if (p == 0) return stats;

  // Draw every parameter vector up front so the result does not depend on
  // the thread count.
  Rng rng(seed, Stream::kGradient);
  std::vector<std::vector<double>> draws(static_cast<std::size_t>(samples), std::vector<double>(p));
  for (auto& d : draws) {
    for (auto& t : d) t = rng.angle();
  }
  std::vector<std::vector<double>> grads(draws.size());
  parallel_for(draws.size(), threads, [&](std::size_t s) { grads[s] = gradient(genome, draws[s], h); });

  stats.per_param_mean.assign(p, 0.0);
  stats.per_param_variance.assign(p, 0.0);
  for (const auto& g : grads) {
    for (std::size_t j = 0; j < p; ++j) stats.per_param_mean[j] += g[j];
  }
  for (auto& m : stats.per_param_mean) m /= samples;
  for (const auto& g : grads) {
    for (std::size_t j = 0; j < p; ++j) {
      const double d = g[j] - stats.per_param_mean[j];
      stats.per_param_variance[j] += d * d;
    }
  }
  for (std::size_t j = 0; j < p; ++j) {
    stats.per_param_variance[j] /= samples - 1;
    if (stats.per_param_variance[j] < threshold) stats.flat_slots.push_back(static_cast<int>(j));
  }
  return stats;
}

GateCount gate_counts(const CircuitGenome& genome) {
  GateCount c;
  for (const Layer& layer : genome.layers()) {
    for (const Gate& g : layer) {
      if (is_parameterized(g.kind)) {
        ++c.parameterized;
      } else {
        ++c.non_parameterized;
      }
    }
  }
  c.total = c.parameterized + c.non_parameterized;
  return c;
}

}  // namespace qansatz
