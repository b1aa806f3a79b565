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

#include "qansatz/expressibility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qansatz/errors.hpp"
#include "qansatz/statevector.hpp"

namespace qansatz {

namespace {

double kl_term(double a, double m) { return a > 0.0 ? a * std::log(a / m) : 0.0; }

void check_distribution(std::span<const double> p, const char* name) {
  double sum = 0.0;
  for (const double x : p) {
    if (!(x >= 0.0)) throw ContractError(std::string(name) + " has a negative or NaN entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ContractError(std::string(name) + " sums to " + std::to_string(sum) + ", not 1");
  }
}

}  // namespace

std::vector<double> sample_fidelities(const CircuitGenome& genome, int samples, Rng& rng) {
  if (samples < 1) throw ContractError("sample count must be >= 1");
  const std::size_t slots = genome.param_count();
  std::vector<double> theta1(slots);
  std::vector<double> theta2(slots);
  StateVector psi1 = StateVector::zero(genome.n_qubits());
  StateVector psi2 = StateVector::zero(genome.n_qubits());
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    for (auto& t : theta1) t = rng.angle();
    for (auto& t : theta2) t = rng.angle();
    run_circuit_into(genome, theta1, psi1);
    run_circuit_into(genome, theta2, psi2);
    out.push_back(fidelity(psi1, psi2));
  }
  return out;
}

std::vector<double> haar_bin_probs(int n_qubits, int bins) {
  if (n_qubits < 1) throw ContractError("Haar distribution needs n_qubits >= 1");
  if (bins < 2) throw ContractError("need at least 2 bins");
  // (1-F)^(N-1) is the Haar survival function.
  const double exponent = std::ldexp(1.0, n_qubits) - 1.0;
  std::vector<double> probs(static_cast<std::size_t>(bins));
  double upper_tail = 1.0;
  for (int j = 0; j < bins; ++j) {
    const double hi = static_cast<double>(j + 1) / bins;
    const double next_tail = j + 1 == bins ? 0.0 : std::pow(1.0 - hi, exponent);
    probs[static_cast<std::size_t>(j)] = upper_tail - next_tail;
    upper_tail = next_tail;
  }
  return probs;
}

double jsd(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw ContractError("JSD of distributions with " + std::to_string(p.size()) + " and " +
                        std::to_string(q.size()) + " bins");
  }
  check_distribution(p, "p");
  check_distribution(q, "q");
  double kl_p = 0.0;
  double kl_q = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    kl_p += kl_term(p[i], m);
    kl_q += kl_term(q[i], m);
  }
  return std::clamp(0.5 * (kl_p + kl_q), 0.0, std::log(2.0));
}

FidelityHistogram fidelity_histogram(std::span<const double> fidelities, int n_qubits, int bins) {
  if (fidelities.empty()) throw ContractError("no fidelities to histogram");
  FidelityHistogram h;
  h.bin_count = bins;
  h.haar_prob = haar_bin_probs(n_qubits, bins);
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  for (const double f : fidelities) {
    auto j = static_cast<long>(std::floor(f * bins));
    j = std::clamp<long>(j, 0, bins - 1);
    ++counts[static_cast<std::size_t>(j)];
  }
  h.empirical_prob.resize(counts.size());
  const auto total = static_cast<double>(fidelities.size());
  for (std::size_t j = 0; j < counts.size(); ++j) {
    h.empirical_prob[j] = static_cast<double>(counts[j]) / total;
  }
  return h;
}

double score_fidelities(std::span<const double> fidelities, int n_qubits, int bins) {
  const FidelityHistogram h = fidelity_histogram(fidelities, n_qubits, bins);
  return jsd(h.empirical_prob, h.haar_prob);
}

ExpressibilityScore expressibility(const CircuitGenome& genome, int samples, int bins,
                                   std::uint64_t seed) {
  if (bins < 2) throw ContractError("need at least 2 bins");
  if (samples < bins) {
    throw ContractError("sample count " + std::to_string(samples) + " below bin count " +
                        std::to_string(bins));
  }
  Rng rng(seed, Stream::kFidelity);
  const auto fidelities = sample_fidelities(genome, samples, rng);
  return {score_fidelities(fidelities, genome.n_qubits(), bins), samples, bins, seed};
}

}  // namespace qansatz
