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
#include <string>
#include <string_view>
#include <vector>

#include "qansatz/statevector.hpp"

namespace qansatz {

/// coefficient * P_0 P_1 ... P_{n-1}; character q of `ops` acts on qubit q.
struct PauliTerm {
  double coeff = 0.0;
  std::string ops;

  bool operator==(const PauliTerm&) const = default;
};

struct HamiltonianInfo {
  std::string name;
  std::string source;
  std::optional<double> reference_ground_energy;

  bool operator==(const HamiltonianInfo&) const = default;
};

/// Real linear combination of Pauli strings. Construction validates lengths
/// and characters, merges terms with equal strings by summing coefficients
/// (first-appearance order is kept) and drops merged terms with |c| < 1e-12.
class PauliHamiltonian {
 public:
  static constexpr double kDropTolerance = 1e-12;

  PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms, HamiltonianInfo info = {});

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  const HamiltonianInfo& info() const noexcept { return info_; }
  void set_info(HamiltonianInfo info) { info_ = std::move(info); }

  /// Bit masks of term k: X-or-Y positions, Z-or-Y positions, Y count.
  struct Masks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    int y_count = 0;
  };
  const Masks& masks(std::size_t k) const { return masks_[k]; }

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
  std::vector<Masks> masks_;
  HamiltonianInfo info_;
};

/// <state| P |state> for a single Pauli string; lies in [-1, 1] for unit states.
double pauli_expectation(const StateVector& state, std::string_view ops);

/// sum_k c_k <state| P_k |state>. The imaginary residue is discarded.
double expectation(const StateVector& state, const PauliHamiltonian& h);

/// sum_k c_k P_k |state>, term by term, never forming the 2^n x 2^n matrix.
StateVector apply_hamiltonian(const PauliHamiltonian& h, const StateVector& state);

}  // namespace qansatz
