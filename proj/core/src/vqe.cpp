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

#include "qansatz/vqe.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qansatz/errors.hpp"
#include "qansatz/rng.hpp"
#include "qansatz/statevector.hpp"

namespace qansatz {

std::string_view to_string(InitMode mode) noexcept {
  switch (mode) {
    case InitMode::kStored: return "stored";
    case InitMode::kRandom: return "random";
    case InitMode::kZeros: return "zeros";
  }
  return "?";
}

std::optional<InitMode> parse_init_mode(std::string_view name) noexcept {
  if (name == "stored") return InitMode::kStored;
  if (name == "random") return InitMode::kRandom;
  if (name == "zeros") return InitMode::kZeros;
  return std::nullopt;
}

void VQEConfig::validate() const {
  if (max_iters < 0) throw ContractError("max_iters must be ≥ 0");
  if (!(learning_rate > 0.0)) throw ContractError("learning rate must be > 0");
  if (!(adam_beta1 > 0.0 && adam_beta1 < 1.0)) throw ContractError("beta1 must be in (0, 1)");
  if (!(adam_beta2 > 0.0 && adam_beta2 < 1.0)) throw ContractError("beta2 must be in (0, 1)");
  if (!(adam_eps > 0.0)) throw ContractError("adam epsilon must be > 0");
  if (plateau_window < 1) throw ContractError("plateau window must be ≥ 1");
}

double energy(const CircuitGenome& genome, std::span<const double> params, const PauliHamiltonian& h) {
  return expectation(run_circuit(genome, params), h);
}

std::vector<double> gradient(const CircuitGenome& genome, std::span<const double> params,
                             const PauliHamiltonian& h) {
  if (params.size() < genome.param_count()) {
    throw StructuralError("gradient needs " + std::to_string(genome.param_count()) + " params");
  }
  constexpr double shift = std::numbers::pi / 2.0;
  std::vector<double> shifted(params.begin(), params.end());
  std::vector<double> grad(genome.param_count());
  StateVector state = StateVector::zero(genome.n_qubits());
  for (std::size_t j = 0; j < grad.size(); ++j) {
    shifted[j] = params[j] + shift;
    run_circuit_into(genome, shifted, state);
    const double plus = expectation(state, h);
    shifted[j] = params[j] - shift;
    run_circuit_into(genome, shifted, state);
    const double minus = expectation(state, h);
    shifted[j] = params[j];
    grad[j] = 0.5 * (plus - minus);
  }
  return grad;
}

VQETrace run_vqe(const CircuitGenome& genome, const PauliHamiltonian& h, const VQEConfig& cfg,
                 std::optional<double> reference) {
  cfg.validate();
  if (genome.n_qubits() != h.n_qubits()) {
    throw StructuralError("circuit has " + std::to_string(genome.n_qubits()) +
                          " qubits, Hamiltonian has " + std::to_string(h.n_qubits()));
  }
  const std::size_t p = genome.param_count();
  std::vector<double> theta;
  switch (cfg.init_mode) {
    case InitMode::kStored: theta = genome.params(); break;
    case InitMode::kZeros: theta.assign(p, 0.0); break;
    case InitMode::kRandom: {
      Rng rng(cfg.seed, Stream::kVqeInit);
      theta.resize(p);
      for (auto& t : theta) t = rng.angle();
      break;
    }
  }

  VQETrace trace;
  std::vector<double> m1(p, 0.0);
  std::vector<double> m2(p, 0.0);
  double beta1_power = 1.0;
  double beta2_power = 1.0;
  int flat_steps = 0;
  double last_energy = 0.0;
  for (int it = 0;; ++it) {
    const double e = energy(genome, theta, h);
    if (!std::isfinite(e)) {
      throw NumericalError("non-finite energy at iteration " + std::to_string(it), last_energy);
    }
    const auto grad = gradient(genome, theta, h);
    double sq = 0.0;
    for (const double g : grad) sq += g * g;
    if (cfg.record_trace || it == 0) {
      trace.energies.push_back(e);
      trace.grad_norms.push_back(std::sqrt(sq));
    } else {
      trace.energies.back() = e;
      trace.grad_norms.back() = std::sqrt(sq);
    }
    if (it > 0) flat_steps = std::abs(e - last_energy) < cfg.convergence_tol ? flat_steps + 1 : 0;
    last_energy = e;
    trace.final_energy = e;
    trace.iterations_used = it;
    if (sq == 0.0 || flat_steps >= cfg.plateau_window) {
      trace.converged = true;
      break;
    }
    if (it >= cfg.max_iters) break;

    beta1_power *= cfg.adam_beta1;
    beta2_power *= cfg.adam_beta2;
    for (std::size_t j = 0; j < p; ++j) {
      m1[j] = cfg.adam_beta1 * m1[j] + (1.0 - cfg.adam_beta1) * grad[j];
      m2[j] = cfg.adam_beta2 * m2[j] + (1.0 - cfg.adam_beta2) * grad[j] * grad[j];
      const double m_hat = m1[j] / (1.0 - beta1_power);
      const double v_hat = m2[j] / (1.0 - beta2_power);
      theta[j] -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + cfg.adam_eps);
    }
  }
  trace.final_params = std::move(theta);
  trace.reference_energy = reference ? reference : h.info().reference_ground_energy;
  if (trace.reference_energy) {
    trace.error_vs_reference = std::abs(trace.final_energy - *trace.reference_energy);
  }
  return trace;
}

}  // namespace qansatz
