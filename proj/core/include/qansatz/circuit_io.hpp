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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qansatz/circuit.hpp"

namespace qansatz {

struct CircuitProvenance {
  std::optional<std::uint64_t> seed;
  std::optional<int> generation;
  std::optional<double> jsd;

  bool operator==(const CircuitProvenance&) const = default;
};

struct CircuitFile {
  CircuitGenome genome;
  CircuitProvenance provenance;
};

/// Circuit file format:
///   {"n_qubits": 4,
///    "gate_set": {"id": "A", "gates": ["RX", "RY", "H"],
///                 "cnot_adjacent_only": true, "initial_h_layer": false},
///    "layers": [[{"kind": "RX", "target": 0, "param_slot": 0},
///                {"kind": "CNOT", "control": 1, "target": 2}], ...],
///    "params": [0.1, ...],
///    "provenance": {"seed": 7, "generation": 3, "jsd": 0.012}}
/// Output is canonical: re-serializing a parsed canonical file reproduces it
/// byte for byte.
std::string circuit_to_json(const CircuitGenome& genome, const CircuitProvenance& provenance = {});
CircuitFile parse_circuit(std::string_view json_text, std::string_view origin = "<input>");
CircuitFile load_circuit(const std::filesystem::path& path);

}  // namespace qansatz
