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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qansatz/circuit.hpp"

namespace qansatz {

using Complex = std::complex<double>;

/// Dense register of 2^n amplitudes. Bit q of an amplitude index is the state
/// of qubit q, so |10> (qubit 0 set) lives at index 1.
class StateVector {
 public:
  /// |0...0> on `n_qubits` qubits; CapacityError outside [1, kMaxQubits].
  static StateVector zero(int n_qubits);

  /// Takes ownership of `amplitudes`; its length must be 2^n_qubits. The
  /// amplitudes need not be normalized (matrix-vector products produce
  /// unnormalized vectors).
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm() const noexcept;

  /// Resets to |0...0> without reallocating.
  void reset() noexcept;

 private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

inline StateVector new_zero_state(int n_qubits) { return StateVector::zero(n_qubits); }

/// Applies `gate` in place. RX(t) = exp(-i t X / 2), likewise RY and RZ.
void apply_gate_inplace(StateVector& state, const Gate& gate, std::span<const double> params);

/// Value-semantics wrapper over apply_gate_inplace.
StateVector apply_gate(StateVector state, const Gate& gate, std::span<const double> params);

/// Runs the circuit on |0...0> with the supplied parameters (not the stored
/// ones). Prepends one H per qubit when the gate set has the initial-H flag.
StateVector run_circuit(const CircuitGenome& genome, std::span<const double> params);

/// Same as run_circuit but reuses `out`'s storage; `out` must already have the
/// genome's qubit count.
void run_circuit_into(const CircuitGenome& genome, std::span<const double> params,
                      StateVector& out);

/// <a|b>.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2 / (<a|a><b|b>) clamped to [0, 1].
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace qansatz
