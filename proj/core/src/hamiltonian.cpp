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

#include "qansatz/hamiltonian.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qansatz/errors.hpp"
#include "qansatz/rng.hpp"

namespace qansatz {

namespace {

using json = nlohmann::ordered_json;

constexpr int kMaxLanczosQubits = 16;
constexpr int kMaxDenseQubits = 10;

double dot_real(std::span<const Complex> a, std::span<const Complex> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (std::conj(a[i]) * b[i]).real();
  return acc;
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm2(std::span<const Complex> a) { return std::sqrt(dot_real(a, a)); }

}  // namespace

PauliHamiltonian tfim(int n_qubits, double coupling, double field) {
  if (n_qubits < 2) throw ContractError("TFIM needs at least 2 qubits");
  std::vector<PauliTerm> terms;
  for (int i = 0; i + 1 < n_qubits; ++i) {
    std::string ops(static_cast<std::size_t>(n_qubits), 'I');
    ops[static_cast<std::size_t>(i)] = 'Z';
    ops[static_cast<std::size_t>(i + 1)] = 'Z';
    terms.push_back({-coupling, std::move(ops)});
  }
  for (int i = 0; i < n_qubits; ++i) {
    std::string ops(static_cast<std::size_t>(n_qubits), 'I');
    ops[static_cast<std::size_t>(i)] = 'X';
    terms.push_back({-field, std::move(ops)});
  }
  std::ostringstream name;
  name << "TFIM(n=" << n_qubits << ",J=" << coupling << ",h=" << field << ")";
  return PauliHamiltonian(n_qubits, std::move(terms), {name.str(), "TFIM", std::nullopt});
}

PauliHamiltonian parse_hamiltonian(std::string_view json_text, std::string_view origin) {
  const std::string where(origin);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError(where + ": top level must be an object");
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
      throw ParseError(where + ": missing integer field \"n_qubits\"");
    }
    const int n = doc["n_qubits"].get<int>();
    if (!doc.contains("terms") || !doc["terms"].is_array()) {
      throw ParseError(where + ": missing array field \"terms\"");
    }
    std::vector<PauliTerm> terms;
    const auto& raw = doc["terms"];
    for (std::size_t k = 0; k < raw.size(); ++k) {
      const auto& t = raw[k];
      const std::string at = where + ": terms[" + std::to_string(k) + "]";
      if (!t.is_object() || !t.contains("coeff") || !t.contains("pauli")) {
        throw ParseError(at + " needs \"coeff\" and \"pauli\"");
      }
      if (!t["coeff"].is_number()) throw ParseError(at + ".coeff is not a number");
      if (!t["pauli"].is_string()) throw ParseError(at + ".pauli is not a string");
      const auto ops = t["pauli"].get<std::string>();
      if (static_cast<int>(ops.size()) != n) {
        throw ParseError(at + ": Pauli string \"" + ops + "\" has length " +
                         std::to_string(ops.size()) + " but n_qubits is " + std::to_string(n));
      }
      terms.push_back({t["coeff"].get<double>(), ops});
    }
    HamiltonianInfo info;
    if (doc.contains("metadata") && doc["metadata"].is_object()) {
      const auto& meta = doc["metadata"];
      if (meta.contains("name") && meta["name"].is_string()) info.name = meta["name"];
      if (meta.contains("source") && meta["source"].is_string()) info.source = meta["source"];
      if (meta.contains("reference_ground_energy") && meta["reference_ground_energy"].is_number()) {
        info.reference_ground_energy = meta["reference_ground_energy"].get<double>();
      }
    }
    return PauliHamiltonian(n, std::move(terms), std::move(info));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

PauliHamiltonian load_hamiltonian(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open Hamiltonian file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hamiltonian(buf.str(), path.string());
}

std::string hamiltonian_to_json(const PauliHamiltonian& h) {
  json doc;
  doc["n_qubits"] = h.n_qubits();
  json terms = json::array();
  for (const auto& t : h.terms()) terms.push_back({{"coeff", t.coeff}, {"pauli", t.ops}});
  doc["terms"] = std::move(terms);
  json meta;
  meta["name"] = h.info().name;
  meta["reference_ground_energy"] =
      h.info().reference_ground_energy ? json(*h.info().reference_ground_energy) : json(nullptr);
  meta["source"] = h.info().source;
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

LanczosResult lanczos_ground(const PauliHamiltonian& h, const LanczosOptions& options) {
  const int n = h.n_qubits();
  if (n > kMaxLanczosQubits) {
    throw CapacityError("Lanczos supports up to " + std::to_string(kMaxLanczosQubits) +
                        " qubits, got " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  if (h.terms().empty()) return {0.0, 0.0, 0};

  Rng rng(options.seed, Stream::kLanczos);
  std::vector<Complex> start(dim);
  for (auto& a : start) a = Complex(rng.normal(), rng.normal());
  const double start_norm = norm2(start);
  for (auto& a : start) a /= start_norm;

  std::vector<std::vector<Complex>> basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  basis.push_back(std::move(start));

  const int cap = static_cast<int>(std::min<std::size_t>(dim, static_cast<std::size_t>(options.max_iterations)));
  double best = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  for (int j = 0; j < cap; ++j) {
    const StateVector hv = apply_hamiltonian(h, StateVector(n, basis.back()));
    std::vector<Complex> w(hv.amplitudes().begin(), hv.amplitudes().end());
    alpha.push_back(dot_real(basis.back(), w));
    // Two passes of classical Gram-Schmidt against the whole basis.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const Complex c = dot(q, w);
        for (std::size_t i = 0; i < dim; ++i) w[i] -= c * q[i];
      }
    }
    const double b = norm2(w);

    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub(std::max<Eigen::Index>(m - 1, 0));
    for (Eigen::Index i = 0; i + 1 < m; ++i) sub[i] = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    best = tri.eigenvalues()[0];
    residual = b * std::abs(tri.eigenvectors()(m - 1, 0));

    const bool exhausted = static_cast<std::size_t>(j + 1) == dim || b < 1e-13;
    if (residual < options.tol || exhausted) {
      return {best, exhausted ? 0.0 : residual, j + 1};
    }
    for (auto& x : w) x /= b;
    beta.push_back(b);
    basis.push_back(std::move(w));
  }
  throw NumericalError("Lanczos did not converge in " + std::to_string(cap) +
                           " iterations (residual " + std::to_string(residual) + ")",
                       best);
}

double ground_energy(const PauliHamiltonian& h, double tol) {
  LanczosOptions options;
  options.tol = tol;
  return lanczos_ground(h, options).energy;
}

double ground_energy_dense(const PauliHamiltonian& h) {
  const int n = h.n_qubits();
  if (n > kMaxDenseQubits) {
    throw CapacityError("dense diagonalization supports up to " +
                        std::to_string(kMaxDenseQubits) + " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd dense(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    std::vector<Complex> e(static_cast<std::size_t>(dim));
    e[static_cast<std::size_t>(col)] = 1.0;
    const StateVector column = apply_hamiltonian(h, StateVector(n, std::move(e)));
    for (Eigen::Index row = 0; row < dim; ++row) {
      dense(row, col) = column[static_cast<std::size_t>(row)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()[0];
}

}  // namespace qansatz
