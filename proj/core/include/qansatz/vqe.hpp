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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qansatz/circuit.hpp"
#include "qansatz/pauli.hpp"

namespace qansatz {

enum class InitMode { kStored, kRandom, kZeros };

std::string_view to_string(InitMode mode) noexcept;
std::optional<InitMode> parse_init_mode(std::string_view name) noexcept;

struct VQEConfig {
  int max_iters = 300;
  double learning_rate = 0.05;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  InitMode init_mode = InitMode::kStored;
  std::uint64_t seed = 0;
  double convergence_tol = 1e-7;
  int plateau_window = 10;
  bool record_trace = true;

  void validate() const;
};

struct VQETrace {
  std::vector<double> energies;    // energies[k] at the parameters after k updates
  std::vector<double> grad_norms;  // gradient norm at the same parameters
  std::vector<double> final_params;
  double final_energy = 0.0;
  std::optional<double> reference_energy;
  std::optional<double> error_vs_reference;
  int iterations_used = 0;  // Adam updates applied
  bool converged = false;
};

/// <psi(params)| h |psi(params)>.
double energy(const CircuitGenome& genome, std::span<const double> params, const PauliHamiltonian& h);

/// Parameter-shift gradient: dE/dt_j = (E(t_j + π/2) - E(t_j - π/2)) / 2.
/// Exact because every slot feeds exactly one Pauli-rotation gate.
std::vector<double> gradient(const CircuitGenome& genome, std::span<const double> params,
                             const PauliHamiltonian& h);

/// Adam on parameter-shift gradients. Stops after cfg.max_iters updates, when
/// |ΔE| < convergence_tol for plateau_window consecutive updates, or when the
/// gradient is exactly zero. `reference` overrides the Hamiltonian's metadata
/// reference energy. A non-finite energy raises NumericalError.
VQETrace run_vqe(const CircuitGenome& genome, const PauliHamiltonian& h, const VQEConfig& cfg,
                 std::optional<double> reference = std::nullopt);

}  // namespace qansatz
