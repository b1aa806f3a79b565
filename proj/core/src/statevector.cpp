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

#include "qansatz/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qansatz/errors.hpp"

namespace qansatz {

namespace {

// Kernels work on the interleaved (re, im) doubles of the amplitude array.

void apply_rx(std::span<Complex> amps, int target, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::size_t bit = std::size_t{1} << target;
  double* v = reinterpret_cast<double*>(amps.data());
  for (std::size_t base = 0; base < amps.size(); base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) {
      double* a0 = v + 2 * i;
      double* a1 = v + 2 * (i | bit);
      const double r0 = a0[0], i0 = a0[1], r1 = a1[0], i1 = a1[1];
      a0[0] = c * r0 + s * i1;
      a0[1] = c * i0 - s * r1;
      a1[0] = s * i0 + c * r1;
      a1[1] = c * i1 - s * r0;
    }
  }
}

void apply_ry(std::span<Complex> amps, int target, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::size_t bit = std::size_t{1} << target;
  double* v = reinterpret_cast<double*>(amps.data());
  for (std::size_t base = 0; base < amps.size(); base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) {
      double* a0 = v + 2 * i;
      double* a1 = v + 2 * (i | bit);
      const double r0 = a0[0], i0 = a0[1], r1 = a1[0], i1 = a1[1];
      a0[0] = c * r0 - s * r1;
      a0[1] = c * i0 - s * i1;
      a1[0] = s * r0 + c * r1;
      a1[1] = s * i0 + c * i1;
    }
  }
}

void apply_rz(std::span<Complex> amps, int target, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::size_t bit = std::size_t{1} << target;
  double* v = reinterpret_cast<double*>(amps.data());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    // |0>: multiply by c - is, |1>: by c + is.
    const double sign = (i & bit) ? s : -s;
    const double r = v[2 * i], im = v[2 * i + 1];
    v[2 * i] = c * r - sign * im;
    v[2 * i + 1] = c * im + sign * r;
  }
}

void apply_h(std::span<Complex> amps, int target) {
  constexpr double r = std::numbers::sqrt2 / 2.0;
  const std::size_t bit = std::size_t{1} << target;
  double* v = reinterpret_cast<double*>(amps.data());
  for (std::size_t base = 0; base < amps.size(); base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) {
      double* a0 = v + 2 * i;
      double* a1 = v + 2 * (i | bit);
      const double r0 = a0[0], i0 = a0[1], r1 = a1[0], i1 = a1[1];
      a0[0] = r * (r0 + r1);
      a0[1] = r * (i0 + i1);
      a1[0] = r * (r0 - r1);
      a1[1] = r * (i0 - i1);
    }
  }
}

void apply_cnot(std::span<Complex> amps, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
  }
}

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw StructuralError("qubit index " + std::to_string(q) + " out of range for " +
                          std::to_string(n) + "-qubit state");
  }
}

}  // namespace

StateVector StateVector::zero(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  amps[0] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(n_qubits_) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
  if (amps_.size() != (std::size_t{1} << n_qubits_)) {
    throw StructuralError("amplitude count " + std::to_string(amps_.size()) + " != 2^" +
                          std::to_string(n_qubits_));
  }
}

double StateVector::norm() const noexcept {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::reset() noexcept {
  std::fill(amps_.begin(), amps_.end(), Complex(0.0, 0.0));
  amps_[0] = 1.0;
}

void apply_gate_inplace(StateVector& state, const Gate& gate, std::span<const double> params) {
  const int n = state.n_qubits();
  check_qubit(gate.target, n);
  auto amps = state.amplitudes();
  if (gate.kind == GateKind::CNOT) {
    if (!gate.control) throw StructuralError("CNOT without control qubit");
    check_qubit(*gate.control, n);
    if (*gate.control == gate.target) throw StructuralError("CNOT control equals target");
    apply_cnot(amps, *gate.control, gate.target);
    return;
  }
  if (gate.kind == GateKind::I) return;
  if (gate.kind == GateKind::H) {
    apply_h(amps, gate.target);
    return;
  }
  if (!gate.param_slot || *gate.param_slot < 0 ||
      static_cast<std::size_t>(*gate.param_slot) >= params.size()) {
    throw StructuralError("missing parameter for " + std::string(to_string(gate.kind)) +
                          " on qubit " + std::to_string(gate.target));
  }
  const double theta = params[static_cast<std::size_t>(*gate.param_slot)];
  switch (gate.kind) {
    case GateKind::RX: apply_rx(amps, gate.target, theta); break;
    case GateKind::RY: apply_ry(amps, gate.target, theta); break;
    default: apply_rz(amps, gate.target, theta); break;
  }
}

StateVector apply_gate(StateVector state, const Gate& gate, std::span<const double> params) {
  apply_gate_inplace(state, gate, params);
  return state;
}

void run_circuit_into(const CircuitGenome& genome, std::span<const double> params,
                      StateVector& out) {
  if (out.n_qubits() != genome.n_qubits()) {
    throw StructuralError("state has " + std::to_string(out.n_qubits()) +
                          " qubits, circuit has " + std::to_string(genome.n_qubits()));
  }
  if (params.size() < genome.param_count()) {
    throw StructuralError("circuit needs " + std::to_string(genome.param_count()) +
                          " params, got " + std::to_string(params.size()));
  }
  out.reset();
  if (genome.gate_set().initial_h_layer) {
    for (int q = 0; q < genome.n_qubits(); ++q) apply_h(out.amplitudes(), q);
  }
  for (const Layer& layer : genome.layers()) {
    for (const Gate& gate : layer) apply_gate_inplace(out, gate, params);
  }
}

StateVector run_circuit(const CircuitGenome& genome, std::span<const double> params) {
  StateVector state = StateVector::zero(genome.n_qubits());
  run_circuit_into(genome, params, state);
  return state;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw StructuralError("inner product of " + std::to_string(a.n_qubits()) + "- and " +
                          std::to_string(b.n_qubits()) + "-qubit states");
  }
  Complex acc(0.0, 0.0);
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
  // Dividing by the self-overlaps makes identical inputs give exactly 1.
  const double overlap = std::norm(inner_product(a, b));
  const double scale = inner_product(a, a).real() * inner_product(b, b).real();
  if (scale <= 0.0) return 0.0;
  return std::clamp(overlap / scale, 0.0, 1.0);
}

}  // namespace qansatz
