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

// Brute-force oracles shared by the test binaries. Everything here is built
// from dense matrices and Kronecker products so that it shares no code path
// with the library's bit-mask kernels.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "qansatz/circuit.hpp"
#include "qansatz/ga.hpp"
#include "qansatz/pauli.hpp"
#include "qansatz/rng.hpp"
#include "qansatz/statevector.hpp"

namespace qansatz::testing {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline Mat pauli_matrix(char p) {
  Mat m(2, 2);
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Full-register operator with `ops[q]` on qubit q. Qubit q is bit q of the
/// basis index, so the Kronecker order runs from the highest qubit down.
inline Mat embed(const std::vector<Mat>& ops) {
  Mat out = Mat::Identity(1, 1);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) out = kron(out, *it);
  return out;
}

inline Mat dense_pauli(const std::string& ops) {
  std::vector<Mat> mats;
  for (const char c : ops) mats.push_back(pauli_matrix(c));
  return embed(mats);
}

inline Mat dense_hamiltonian(const PauliHamiltonian& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  Mat out = Mat::Zero(dim, dim);
  for (const auto& t : h.terms()) out += t.coeff * dense_pauli(t.ops);
  return out;
}

inline Mat single_qubit_unitary(GateKind kind, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat m(2, 2);
  switch (kind) {
    case GateKind::RX: m << c, cd(0, -s), cd(0, -s), c; break;
    case GateKind::RY: m << c, -s, s, c; break;
    case GateKind::RZ: m << std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2); break;
    case GateKind::H: m << 1, 1, 1, -1; m /= std::numbers::sqrt2; break;
    default: m = Mat::Identity(2, 2); break;
  }
  return m;
}

inline Mat dense_gate(int n, const Gate& g, const std::vector<double>& params) {
  if (g.kind == GateKind::CNOT) {
    Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    std::vector<Mat> a(static_cast<std::size_t>(n), Mat::Identity(2, 2));
    std::vector<Mat> b = a;
    a[static_cast<std::size_t>(*g.control)] = p0;
    b[static_cast<std::size_t>(*g.control)] = p1;
    b[static_cast<std::size_t>(g.target)] = pauli_matrix('X');
    return embed(a) + embed(b);
  }
  const double theta = g.param_slot ? params[static_cast<std::size_t>(*g.param_slot)] : 0.0;
  std::vector<Mat> ops(static_cast<std::size_t>(n), Mat::Identity(2, 2));
  ops[static_cast<std::size_t>(g.target)] = single_qubit_unitary(g.kind, theta);
  return embed(ops);
}

/// Dense simulation of a genome, including the optional Hadamard prelude.
inline Vec dense_run(const CircuitGenome& genome, const std::vector<double>& params) {
  const int n = genome.n_qubits();
  Vec psi = Vec::Zero(Eigen::Index{1} << n);
  psi(0) = 1;
  if (genome.gate_set().initial_h_layer) {
    for (int q = 0; q < n; ++q) psi = dense_gate(n, Gate::single(GateKind::H, q), params) * psi;
  }
  for (const auto& layer : genome.layers()) {
    for (const auto& g : layer) psi = dense_gate(n, g, params) * psi;
  }
  return psi;
}

inline Vec to_eigen(const StateVector& s) {
  Vec v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

/// Haar-random pure state: a normalized vector of i.i.d. complex Gaussians.
inline StateVector haar_state(int n, Rng& rng) {
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {rng.normal(), rng.normal()};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(n, std::move(amps));
}

inline std::vector<double> random_angles(std::size_t count, Rng& rng) {
  std::vector<double> out(count);
  for (auto& v : out) v = rng.angle();
  return out;
}

inline GateSet random_table_set(Rng& rng) {
  return GateSet::table(kGateSetIds[rng.index(kGateSetIds.size())]);
}

/// Random TFIM-free Hamiltonian of `terms` random Pauli strings.
inline PauliHamiltonian random_hamiltonian(int n, int terms, Rng& rng) {
  static constexpr char kOps[] = {'I', 'X', 'Y', 'Z'};
  std::vector<PauliTerm> out;
  for (int t = 0; t < terms; ++t) {
    std::string ops;
    for (int q = 0; q < n; ++q) ops.push_back(kOps[rng.index(4)]);
    out.push_back({2.0 * rng.uniform01() - 1.0, ops});
  }
  return PauliHamiltonian(n, std::move(out));
}

}  // namespace qansatz::testing
