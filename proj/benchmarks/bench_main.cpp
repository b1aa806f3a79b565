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

#include <benchmark/benchmark.h>

#include "qansatz/expressibility.hpp"
#include "qansatz/ga.hpp"
#include "qansatz/hamiltonian.hpp"
#include "qansatz/statevector.hpp"
#include "qansatz/vqe.hpp"

namespace {

using namespace qansatz;

CircuitGenome sample_genome(int n, int depth) {
  Rng rng(1);
  return random_genome(GateSet::table('G'), n, depth, rng);
}

void BM_RunCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CircuitGenome g = sample_genome(n, 16);
  StateVector out = new_zero_state(n);
  for (auto _ : state) {
    run_circuit_into(g, g.params(), out);
    benchmark::DoNotOptimize(out.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.gate_count()));
}
BENCHMARK(BM_RunCircuit)->DenseRange(4, 16, 4);

void BM_Expressibility(benchmark::State& state) {
  const CircuitGenome g = sample_genome(static_cast<int>(state.range(0)), 16);
  for (auto _ : state) benchmark::DoNotOptimize(expressibility(g, kDefaultSamples, kDefaultBins, 1).jsd);
}
BENCHMARK(BM_Expressibility)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PauliHamiltonian h = tfim(n, 1.0, -0.5);
  const CircuitGenome g = sample_genome(n, 8);
  const StateVector s = run_circuit(g, g.params());
  for (auto _ : state) benchmark::DoNotOptimize(expectation(s, h));
}
BENCHMARK(BM_Expectation)->DenseRange(4, 16, 4);

void BM_H2Expectation(benchmark::State& state) {
  const PauliHamiltonian h = load_hamiltonian(QANSATZ_BENCH_DATA_DIR "/hamiltonians/h2_sto3g_jw.json");
  const CircuitGenome g = sample_genome(4, 8);
  const StateVector s = run_circuit(g, g.params());
  for (auto _ : state) benchmark::DoNotOptimize(expectation(s, h));
}
BENCHMARK(BM_H2Expectation);

void BM_Gradient(benchmark::State& state) {
  const PauliHamiltonian h = tfim(4, 1.0, -0.5);
  const CircuitGenome g = sample_genome(4, 16);
  for (auto _ : state) benchmark::DoNotOptimize(gradient(g, g.params(), h));
}
BENCHMARK(BM_Gradient)->Unit(benchmark::kMicrosecond);

void BM_Lanczos(benchmark::State& state) {
  const PauliHamiltonian h = tfim(static_cast<int>(state.range(0)), 1.0, -0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ground_energy(h));
}
BENCHMARK(BM_Lanczos)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
