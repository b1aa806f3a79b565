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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <numbers>

#include "qansatz/errors.hpp"
#include "qansatz/hamiltonian.hpp"
#include "support.hpp"

#ifndef QANSATZ_TEST_DATA_DIR
#error "QANSATZ_TEST_DATA_DIR must point at data/"
#endif

namespace qansatz {
namespace {

const std::string kH2Path = std::string(QANSATZ_TEST_DATA_DIR) + "/hamiltonians/h2_sto3g_jw.json";

double oracle_ground(const PauliHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<testing::Mat> es(testing::dense_hamiltonian(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

StateVector random_state(int n, Rng& rng) { return testing::haar_state(n, rng); }

TEST(Tfim, TermLayout) {
  const PauliHamiltonian h = tfim(2, 1.0, -0.5);
  ASSERT_EQ(h.terms().size(), 3u);
  EXPECT_EQ(h.terms()[0], (PauliTerm{-1.0, "ZZ"}));
  EXPECT_EQ(h.terms()[1], (PauliTerm{0.5, "XI"}));
  EXPECT_EQ(h.terms()[2], (PauliTerm{0.5, "IX"}));

  const PauliHamiltonian h3 = tfim(3, 1.0, -0.5);
  int zz = 0, x = 0;
  for (const auto& t : h3.terms()) {
    if (t.ops.find('Z') != std::string::npos) ++zz;
    if (t.ops.find('X') != std::string::npos) ++x;
  }
  EXPECT_EQ(zz, 2);
  EXPECT_EQ(x, 3);

  // J = 0 drops the couplings and leaves +sum X.
  const PauliHamiltonian field = tfim(3, 0.0, -1.0);
  ASSERT_EQ(field.terms().size(), 3u);
  for (const auto& t : field.terms()) EXPECT_EQ(t.coeff, 1.0);
  EXPECT_THROW(tfim(1, 1.0, 1.0), ContractError);
}

TEST(PauliHamiltonian, MergesDuplicatesAndValidates) {
  const PauliHamiltonian h = parse_hamiltonian(R"({"n_qubits": 4, "terms": [
      {"coeff": 0.3, "pauli": "ZZII"}, {"coeff": 1.0, "pauli": "XIII"},
      {"coeff": 0.2, "pauli": "ZZII"}]})");
  ASSERT_EQ(h.terms().size(), 2u);
  EXPECT_EQ(h.terms()[0].ops, "ZZII");
  EXPECT_DOUBLE_EQ(h.terms()[0].coeff, 0.5);

  const PauliHamiltonian cancel(2, {{0.5, "XX"}, {-0.5, "XX"}});
  EXPECT_TRUE(cancel.terms().empty());
  EXPECT_THROW(PauliHamiltonian(2, {{1.0, "XA"}}), ParseError);
  EXPECT_THROW(PauliHamiltonian(2, {{1.0, "XXX"}}), ParseError);
}

TEST(PauliHamiltonian, EmptyTermsIsZeroOperator) {
  const PauliHamiltonian h = parse_hamiltonian(R"({"n_qubits": 3, "terms": []})");
  Rng rng(1);
  EXPECT_EQ(expectation(random_state(3, rng), h), 0.0);
  EXPECT_EQ(ground_energy(h), 0.0);
}

TEST(HamiltonianIo, ParseErrorsNameTheLocation) {
  try {
    parse_hamiltonian(R"({"n_qubits": 2, "terms": [{"coeff": 1, "pauli": "XX"}, {"coeff": 1, "pauli": "X"}]})",
                      "bad.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.json"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("terms[1]"), std::string::npos);
  }
  EXPECT_THROW(parse_hamiltonian("{\"n_qubits\": 2,\n \"terms\": [}"), ParseError);
  EXPECT_THROW(parse_hamiltonian(R"({"terms": []})"), ParseError);
  EXPECT_THROW(load_hamiltonian("/nonexistent.json"), ParseError);
}

TEST(HamiltonianIo, RoundTrip) {
  PauliHamiltonian h = tfim(3, 0.7, 0.2);
  h.set_info({"chain", "test", -1.5});
  const PauliHamiltonian back = parse_hamiltonian(hamiltonian_to_json(h));
  EXPECT_EQ(back.terms(), h.terms());
  EXPECT_EQ(back.info(), h.info());
}

TEST(HamiltonianIo, CommittedH2File) {
  const PauliHamiltonian h = load_hamiltonian(kH2Path);
  EXPECT_EQ(h.n_qubits(), 4);
  EXPECT_EQ(h.terms().size(), 15u);
  ASSERT_TRUE(h.info().reference_ground_energy.has_value());
  // The embedded reference agrees with our own exact solver.
  EXPECT_NEAR(*h.info().reference_ground_energy, ground_energy(h), 1e-6);
  EXPECT_NEAR(ground_energy(h), -1.13619, 5e-5);
}

TEST(Expectation, Examples) {
  const PauliHamiltonian z(1, {{1.0, "Z"}});
  const StateVector zero = new_zero_state(1);
  EXPECT_EQ(expectation(zero, z), 1.0);
  EXPECT_NEAR(expectation(apply_gate(zero, Gate::single(GateKind::H, 0), {}), z), 0.0, 1e-15);
  const PauliHamiltonian h(2, {{-1.0, "ZZ"}, {0.5, "XI"}, {0.5, "IX"}});
  EXPECT_EQ(expectation(new_zero_state(2), h), -1.0);
  EXPECT_THROW(expectation(new_zero_state(3), h), StructuralError);
}

TEST(ApplyHamiltonian, Examples) {
  const StateVector zero = new_zero_state(1);
  const StateVector z = apply_hamiltonian(PauliHamiltonian(1, {{1.0, "Z"}}), zero);
  EXPECT_EQ(z[0], Complex(1, 0));
  EXPECT_EQ(z[1], Complex(0, 0));
  const StateVector x = apply_hamiltonian(PauliHamiltonian(1, {{1.0, "X"}}), zero);
  EXPECT_EQ(x[0], Complex(0, 0));
  EXPECT_EQ(x[1], Complex(1, 0));
  EXPECT_THROW(apply_hamiltonian(PauliHamiltonian(2, {{1.0, "XX"}}), zero), StructuralError);
}

// Property: the mask-based kernels agree with explicit Kronecker-product
// matrices on random states and random Hamiltonians.
TEST(HamiltonianProperty, MatchesDenseOracle) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.index(6));
    const PauliHamiltonian h = testing::random_hamiltonian(n, 1 + static_cast<int>(rng.index(12)), rng);
    const StateVector s = random_state(n, rng);
    const testing::Mat m = testing::dense_hamiltonian(h);
    const testing::Vec v = testing::to_eigen(s);
    const double want = (v.adjoint() * m * v)(0).real();
    EXPECT_NEAR(expectation(s, h), want, 1e-10);
    EXPECT_LT((testing::to_eigen(apply_hamiltonian(h, s)) - m * v).norm(), 1e-10);
  }
}

TEST(HamiltonianProperty, PauliExpectationBounded) {
  Rng rng(22);
  static constexpr char kOps[] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng.index(6));
    std::string ops;
    for (int q = 0; q < n; ++q) ops.push_back(kOps[rng.index(4)]);
    const double e = pauli_expectation(random_state(n, rng), ops);
    EXPECT_GE(e, -1.0 - 1e-12);
    EXPECT_LE(e, 1.0 + 1e-12);
  }
}

TEST(Lanczos, Examples) {
  EXPECT_NEAR(ground_energy(PauliHamiltonian(1, {{1.0, "Z"}})), -1.0, 1e-12);
  EXPECT_NEAR(ground_energy(tfim(2, 1.0, -0.5)), -std::numbers::sqrt2, 1e-10);
  // Hand-derived: the even-parity block of -ZZ + 0.5(XI + IX) gives -sqrt(J^2 + 4h^2).
  EXPECT_NEAR(oracle_ground(tfim(2, 1.0, -0.5)), -std::numbers::sqrt2, 1e-12);
}

TEST(Lanczos, CapacityAndResult) {
  const LanczosResult r = lanczos_ground(tfim(6, 1.0, -0.5));
  EXPECT_LE(r.residual, 1e-8);
  EXPECT_GT(r.iterations, 0);
  EXPECT_THROW(ground_energy_dense(tfim(11, 1.0, 1.0)), CapacityError);
}

TEST(LanczosProperty, AgreesWithDenseUpToEightQubits) {
  for (int n = 2; n <= 8; ++n) {
    for (const double field : {-0.5, -1.0, 0.3}) {
      const PauliHamiltonian h = tfim(n, 1.0, field);
      EXPECT_NEAR(ground_energy(h), ground_energy_dense(h), 1e-8) << "n=" << n << " h=" << field;
    }
  }
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.index(6));
    const PauliHamiltonian h = testing::random_hamiltonian(n, 3 + static_cast<int>(rng.index(10)), rng);
    EXPECT_NEAR(ground_energy(h), oracle_ground(h), 1e-8);
  }
  const PauliHamiltonian h2 = load_hamiltonian(kH2Path);
  EXPECT_NEAR(ground_energy(h2), ground_energy_dense(h2), 1e-8);
}

TEST(LanczosProperty, VariationalBound) {
  Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.index(5));
    const PauliHamiltonian h = testing::random_hamiltonian(n, 8, rng);
    const double e0 = ground_energy(h);
    for (int s = 0; s < 10; ++s) EXPECT_GE(expectation(random_state(n, rng), h), e0 - 1e-8);
  }
}

TEST(LanczosProperty, TfimFieldSignSymmetry) {
  for (int n = 2; n <= 6; ++n) {
    for (const double field : {0.5, 1.3}) {
      EXPECT_NEAR(ground_energy(tfim(n, 1.0, field)), ground_energy(tfim(n, 1.0, -field)), 1e-9);
    }
  }
}

}  // namespace
}  // namespace qansatz
