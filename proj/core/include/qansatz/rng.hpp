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
#include <random>

namespace qansatz {

/// Named sub-streams of one master seed. Two generators built from the same
/// seed but different streams are statistically independent.
enum class Stream : std::uint64_t {
  kEvolution = 1,   // GA structure: initialization, pairing, crossover, mutation
  kFidelity = 2,    // expressibility sampling, one per genome
  kVqeInit = 3,     // random VQE starting point
  kGradient = 4,    // gradient-variance parameter draws
  kLanczos = 5,     // Lanczos start vector
};

/// Seed of the fidelity stream for genome `index` of a population.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return master_seed ^ index;
}

/// Deterministic random source. All draws are defined in terms of raw 64-bit
/// outputs of mt19937_64 so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, Stream stream = Stream::kEvolution);

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform angle on [0, 2π).
  double angle();

  /// Uniform integer on [0, n). `n` must be positive.
  std::size_t index(std::size_t n);

  bool bernoulli(double p) { return uniform01() < p; }

  /// Standard normal via Box–Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qansatz
