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

#include <cstdint>
#include <span>
#include <vector>

#include "qansatz/circuit.hpp"
#include "qansatz/rng.hpp"

namespace qansatz {

inline constexpr int kDefaultSamples = 5000;
inline constexpr int kDefaultBins = 75;

/// Empirical fidelity distribution and the Haar reference over `bin_count`
/// uniform bins of [0, 1]; bin j covers [j/B, (j+1)/B), the last bin is closed.
struct FidelityHistogram {
  int bin_count = 0;
  std::vector<double> empirical_prob;
  std::vector<double> haar_prob;

  double lower_edge(int j) const { return static_cast<double>(j) / bin_count; }
  double upper_edge(int j) const { return static_cast<double>(j + 1) / bin_count; }
};

struct ExpressibilityScore {
  double jsd = 0.0;  // nats, in [0, ln 2]
  int sample_count = 0;
  int bin_count = 0;
  std::uint64_t seed = 0;
};

/// S fidelities |<psi(t1)|psi(t2)>|^2 with t1, t2 drawn fresh and uniform on
/// [0, 2π) for every slot. The genome's stored parameters are not used.
std::vector<double> sample_fidelities(const CircuitGenome& genome, int samples, Rng& rng);

/// Probability mass of the Haar fidelity density (N-1)(1-F)^(N-2), N = 2^n,
/// in each uniform bin: (1-lo)^(N-1) - (1-hi)^(N-1).
std::vector<double> haar_bin_probs(int n_qubits, int bins);

/// Jensen-Shannon divergence in nats. Both inputs must have equal length and
/// sum to 1 within 1e-9 (ContractError otherwise).
double jsd(std::span<const double> p, std::span<const double> q);

FidelityHistogram fidelity_histogram(std::span<const double> fidelities, int n_qubits, int bins);

/// JSD between the histogram of `fidelities` and the Haar reference.
double score_fidelities(std::span<const double> fidelities, int n_qubits, int bins);

/// sample_fidelities -> histogram -> JSD against Haar. Deterministic in
/// (genome structure, samples, bins, seed).
ExpressibilityScore expressibility(const CircuitGenome& genome, int samples = kDefaultSamples,
                                   int bins = kDefaultBins, std::uint64_t seed = 0);

}  // namespace qansatz
