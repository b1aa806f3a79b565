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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qansatz {

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 20;

enum class GateKind { RX, RY, RZ, H, I, CNOT };

std::string_view to_string(GateKind kind) noexcept;
std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept;

constexpr bool is_parameterized(GateKind kind) noexcept {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

/// One gate placement. `control` is set only for CNOT, `param_slot` only for
/// rotations; `param_slot` indexes the parameter vector the circuit is run with.
struct Gate {
  GateKind kind = GateKind::I;
  int target = 0;
  std::optional<int> control;
  std::optional<int> param_slot;

  static Gate single(GateKind kind, int target, std::optional<int> slot = std::nullopt);
  static Gate cnot(int control, int target);

  bool operator==(const Gate&) const = default;
};

/// Gates acting on pairwise disjoint qubits, stored in ascending target order.
using Layer = std::vector<Gate>;

/// Gate alphabet and structural rules the GA searches over. CNOT is part of
/// every set; `cnot_adjacent_only` restricts it to |control - target| == 1 and
/// `initial_h_layer` prepends a Hadamard on every qubit when a circuit runs.
struct GateSet {
  std::string id;
  std::vector<GateKind> single_qubit_gates;
  bool cnot_adjacent_only = false;
  bool initial_h_layer = false;

  bool contains(GateKind kind) const noexcept;

  /// Sets A through I.
  static GateSet table(char id);

  /// Either a table id ("A".."I") or a custom alphabet such as
  /// "RX,RY,H,CNOT*" where `CNOT*` means adjacent-only and an extra `+H`
  /// token requests the initial Hadamard layer.
  static GateSet parse(std::string_view spec);

  /// Canonical text form accepted by `parse`.
  std::string spec() const;

  bool operator==(const GateSet&) const = default;
};

inline constexpr std::string_view kGateSetIds = "ABCDEFGHI";

/// A layered circuit plus stored parameter values (the GA individual).
///
/// Construction sorts each layer by target and checks the structural
/// invariants: indices in range, no qubit used twice in a layer, CNOT
/// adjacency when the gate set requires it, gates drawn from the gate set,
/// and parameter slots numbered 0..P-1 in first-appearance order with exactly
/// P stored values. Violations raise StructuralError.
class CircuitGenome {
 public:
  CircuitGenome(int n_qubits, GateSet gate_set, std::vector<Layer> layers,
                std::vector<double> params);

  int n_qubits() const noexcept { return n_qubits_; }
  const GateSet& gate_set() const noexcept { return gate_set_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  const std::vector<double>& params() const noexcept { return params_; }
  int depth() const noexcept { return static_cast<int>(layers_.size()); }
  std::size_t param_count() const noexcept { return params_.size(); }
  std::size_t gate_count() const noexcept;

  CircuitGenome with_params(std::vector<double> params) const;

  /// Equality of qubit count, gate set and gate layout; stored parameters are
  /// not compared.
  bool same_structure(const CircuitGenome& other) const noexcept;

  bool operator==(const CircuitGenome&) const = default;

 private:
  int n_qubits_ = 0;
  GateSet gate_set_;
  std::vector<Layer> layers_;
  std::vector<double> params_;
};

/// Lists every invariant violation of a raw layout without throwing. Empty
/// when the layout is valid for `n_qubits` and `gate_set` with `param_count`
/// stored values.
std::vector<std::string> find_violations(int n_qubits, const GateSet& gate_set,
                                         std::span<const Layer> layers, std::size_t param_count);

/// Sorts every layer by target and assigns param slots 0..P-1 in order of
/// appearance. Returns P.
std::size_t assign_param_slots(std::vector<Layer>& layers);

}  // namespace qansatz
