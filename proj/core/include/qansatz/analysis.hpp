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
#include <span>
#include <vector>

#include "qansatz/circuit.hpp"
#include "qansatz/pauli.hpp"

namespace qansatz {

inline constexpr int kDefaultLandscapeResolution = 50;
inline constexpr double kFlatVarianceThreshold = 1e-6;

/// Energy over a 2-parameter slice. energies[a][b] is evaluated with slot
/// `param_i` at axis[a] and slot `param_j` at axis[b]; every other slot keeps
/// its base value.
struct LandscapeGrid {
  int param_i = 0;
  int param_j = 0;
  std::vector<double> axis;  // `resolution` points from 0 to 2π inclusive
  std::vector<std::vector<double>> energies;
  std::vector<double> base_params;
};

LandscapeGrid landscape_scan(const CircuitGenome& genome, const PauliHamiltonian& h, int param_i,
                             int param_j, int resolution, std::span<const double> base_params,
                             int threads = 1);

struct GradientStats {
  std::vector<double> per_param_mean;
  std::vector<double> per_param_variance;  // unbiased sample variance
  int sample_count = 0;
  double threshold = kFlatVarianceThreshold;
  std::vector<int> flat_slots;  // variance < threshold
};

/// Parameter-shift gradients at `samples` uniform random parameter vectors.
GradientStats gradient_variance(const CircuitGenome& genome, const PauliHamiltonian& h,
                                int samples, std::uint64_t seed,
                                double threshold = kFlatVarianceThreshold, int threads = 1);

/// Identity gates count as non-parameterized placements and a CNOT counts
/// once. The implicit initial Hadamard layer is not counted.
struct GateCount {
  std::size_t parameterized = 0;
  std::size_t non_parameterized = 0;
  std::size_t total = 0;

  bool operator==(const GateCount&) const = default;
};

GateCount gate_counts(const CircuitGenome& genome);

}  // namespace qansatz
