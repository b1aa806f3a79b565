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

#include "qansatz/pauli.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "qansatz/errors.hpp"

namespace qansatz {

namespace {

PauliHamiltonian::Masks compile(std::string_view ops) {
  PauliHamiltonian::Masks m;
  for (std::size_t q = 0; q < ops.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (ops[q]) {
      case 'I': break;
      case 'X': m.x |= bit; break;
      case 'Z': m.z |= bit; break;
      case 'Y':
        m.x |= bit;
        m.z |= bit;
        ++m.y_count;
        break;
      default:
        throw ParseError(std::string("invalid Pauli character '") + ops[q] + "' in \"" +
                         std::string(ops) + "\"");
    }
  }
  return m;
}

// i^k for k mod 4.
Complex i_pow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// P = i^{n_y} X^x Z^z, so P|b> = i^{n_y} (-1)^{|b & z|} |b ^ x>.
Complex term_expectation(std::span<const Complex> amps, const PauliHamiltonian::Masks& m) {
  Complex acc(0.0, 0.0);
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const Complex v = std::conj(amps[b ^ m.x]) * amps[b];
    if (std::popcount(static_cast<std::uint64_t>(b) & m.z) & 1) {
      acc -= v;
    } else {
      acc += v;
    }
  }
  return acc * i_pow(m.y_count);
}

void check_dims(int state_qubits, int h_qubits) {
  if (state_qubits != h_qubits) {
    throw StructuralError("Hamiltonian acts on " + std::to_string(h_qubits) +
                          " qubits, state has " + std::to_string(state_qubits));
  }
}

}  // namespace

PauliHamiltonian::PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms, HamiltonianInfo info)
    : n_qubits_(n_qubits), info_(std::move(info)) {
  if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
    throw CapacityError("Hamiltonian qubit count " + std::to_string(n_qubits_) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
  std::unordered_map<std::string, std::size_t> index;
  std::vector<PauliTerm> merged;
  for (PauliTerm& t : terms) {
    if (!std::isfinite(t.coeff)) throw ParseError("non-finite coefficient for \"" + t.ops + "\"");
    if (static_cast<int>(t.ops.size()) != n_qubits_) {
      throw ParseError("Pauli string \"" + t.ops + "\" has length " + std::to_string(t.ops.size()) +
                       ", expected " + std::to_string(n_qubits_));
    }
    compile(t.ops);
    const auto [it, inserted] = index.emplace(t.ops, merged.size());
    if (inserted) {
      merged.push_back(std::move(t));
    } else {
      merged[it->second].coeff += t.coeff;
    }
  }
  for (PauliTerm& t : merged) {
    if (std::abs(t.coeff) < kDropTolerance) continue;
    masks_.push_back(compile(t.ops));
    terms_.push_back(std::move(t));
  }
}

double pauli_expectation(const StateVector& state, std::string_view ops) {
  check_dims(state.n_qubits(), static_cast<int>(ops.size()));
  return term_expectation(state.amplitudes(), compile(ops)).real();
}

double expectation(const StateVector& state, const PauliHamiltonian& h) {
  check_dims(state.n_qubits(), h.n_qubits());
  double energy = 0.0;
  for (std::size_t k = 0; k < h.terms().size(); ++k) {
    energy += h.terms()[k].coeff * term_expectation(state.amplitudes(), h.masks(k)).real();
  }
  return energy;
}

StateVector apply_hamiltonian(const PauliHamiltonian& h, const StateVector& state) {
  check_dims(state.n_qubits(), h.n_qubits());
  const auto in = state.amplitudes();
  std::vector<Complex> out(in.size());
  for (std::size_t k = 0; k < h.terms().size(); ++k) {
    const auto& m = h.masks(k);
    const Complex phase = h.terms()[k].coeff * i_pow(m.y_count);
    for (std::size_t b = 0; b < in.size(); ++b) {
      const Complex v = phase * in[b];
      if (std::popcount(static_cast<std::uint64_t>(b) & m.z) & 1) {
        out[b ^ m.x] -= v;
      } else {
        out[b ^ m.x] += v;
      }
    }
  }
  return StateVector(state.n_qubits(), std::move(out));
}

}  // namespace qansatz
