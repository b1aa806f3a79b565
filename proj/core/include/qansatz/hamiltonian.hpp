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

#include <filesystem>
#include <string>
#include <string_view>

#include "qansatz/pauli.hpp"

namespace qansatz {

/// Open-boundary transverse-field Ising chain
///   H = -J sum_{i} Z_i Z_{i+1} - h sum_i X_i
/// ContractError for n < 2.
PauliHamiltonian tfim(int n_qubits, double coupling, double field);

/// Reads the Hamiltonian JSON format:
///   {"n_qubits": int,
///    "terms": [{"coeff": float, "pauli": "XZYI..."}, ...],
///    "metadata": {"name": str, "reference_ground_energy": float|null, "source": str}}
/// Character 0 of each Pauli string acts on qubit 0. Throws ParseError with
/// the offending location.
PauliHamiltonian load_hamiltonian(const std::filesystem::path& path);
PauliHamiltonian parse_hamiltonian(std::string_view json_text, std::string_view origin = "<input>");

/// Inverse of parse_hamiltonian.
std::string hamiltonian_to_json(const PauliHamiltonian& h);

struct LanczosOptions {
  double tol = 1e-8;
  int max_iterations = 400;
  std::uint64_t seed = 0x5EED;
};

struct LanczosResult {
  double energy = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Lowest eigenvalue by matrix-free Lanczos with full reorthogonalization.
/// Converged when the Ritz residual ||H x - e x|| drops below `tol` or the
/// Krylov space becomes invariant. Supports up to 16 qubits; throws
/// NumericalError carrying the best Ritz value when the iteration cap is hit.
LanczosResult lanczos_ground(const PauliHamiltonian& h, const LanczosOptions& options = {});

/// lanczos_ground(h, {tol}).energy.
double ground_energy(const PauliHamiltonian& h, double tol = 1e-8);

/// Lowest eigenvalue of the dense matrix; cross-check path for n <= 10.
double ground_energy_dense(const PauliHamiltonian& h);

}  // namespace qansatz
