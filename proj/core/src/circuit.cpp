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

#include "qansatz/circuit.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "qansatz/errors.hpp"

namespace qansatz {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 6> kNames{{
    {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::H, "H"},
    {GateKind::I, "I"},
    {GateKind::CNOT, "CNOT"},
}};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

void sort_layer(Layer& layer) {
  std::stable_sort(layer.begin(), layer.end(),
                   [](const Gate& a, const Gate& b) { return a.target < b.target; });
}

}  // namespace

std::string_view to_string(GateKind kind) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  if (name == "CX") return GateKind::CNOT;
  return std::nullopt;
}

Gate Gate::single(GateKind kind, int target, std::optional<int> slot) {
  return Gate{kind, target, std::nullopt, slot};
}

Gate Gate::cnot(int control, int target) {
  return Gate{GateKind::CNOT, target, control, std::nullopt};
}

bool GateSet::contains(GateKind kind) const noexcept {
  if (kind == GateKind::CNOT) return true;
  return std::find(single_qubit_gates.begin(), single_qubit_gates.end(), kind) !=
         single_qubit_gates.end();
}

GateSet GateSet::table(char id) {
  using enum GateKind;
  switch (id) {
    case 'A': return {"A", {RX, RY, H}, true, false};
    case 'B': return {"B", {RX, RY, H, I}, true, false};
    case 'C': return {"C", {RX, RY, H, I}, false, false};
    case 'D': return {"D", {RY, RZ, H, I}, false, false};
    case 'E': return {"E", {RY, RZ, I}, false, false};
    case 'F': return {"F", {RX, RY, RZ, I}, false, true};
    case 'G': return {"G", {RX, RY, RZ, H, I}, false, false};
    case 'H': return {"H", {RX, RY, H}, true, true};
    case 'I': return {"I", {RX, RY, RZ, I}, false, false};
    default: break;
  }
  throw ContractError(std::string("unknown gate set '") + id + "' (expected A-I)");
}

GateSet GateSet::parse(std::string_view spec) {
  const std::string text = trim(spec);
  if (text.size() == 1 && kGateSetIds.find(text[0]) != std::string_view::npos) {
    return table(text[0]);
  }
  GateSet gs;
  gs.id = "custom";
  bool saw_cnot = false;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    if (token == "+H") {
      gs.initial_h_layer = true;
      continue;
    }
    if (token == "CNOT*" || token == "CX*") {
      saw_cnot = true;
      gs.cnot_adjacent_only = true;
      continue;
    }
    const auto kind = parse_gate_kind(token);
    if (!kind) throw ContractError("unknown gate '" + token + "' in gate set spec '" + text + "'");
    if (*kind == GateKind::CNOT) {
      saw_cnot = true;
      continue;
    }
    if (!gs.contains(*kind)) gs.single_qubit_gates.push_back(*kind);
  }
  if (!saw_cnot) throw ContractError("gate set spec '" + text + "' must include CNOT or CNOT*");
  if (gs.single_qubit_gates.empty()) {
    throw ContractError("gate set spec '" + text + "' has no single-qubit gates");
  }
  return gs;
}

std::string GateSet::spec() const {
  if (id.size() == 1 && kGateSetIds.find(id[0]) != std::string_view::npos &&
      *this == table(id[0])) {
    return id;
  }
  std::string out;
  for (const auto kind : single_qubit_gates) {
    out += to_string(kind);
    out += ',';
  }
  out += cnot_adjacent_only ? "CNOT*" : "CNOT";
  if (initial_h_layer) out += ",+H";
  return out;
}

std::vector<std::string> find_violations(int n_qubits, const GateSet& gate_set,
                                         std::span<const Layer> layers, std::size_t param_count) {
  std::vector<std::string> out;
  auto report = [&](std::size_t layer, const std::string& msg) {
    out.push_back("layer " + std::to_string(layer) + ": " + msg);
  };
  int next_slot = 0;
  for (std::size_t li = 0; li < layers.size(); ++li) {
    std::vector<bool> used(static_cast<std::size_t>(std::max(n_qubits, 0)), false);
    auto claim = [&](int q) {
      if (q < 0 || q >= n_qubits) {
        report(li, "qubit " + std::to_string(q) + " out of range");
        return;
      }
      if (used[static_cast<std::size_t>(q)]) report(li, "qubit " + std::to_string(q) + " used twice");
      used[static_cast<std::size_t>(q)] = true;
    };
    for (const Gate& g : layers[li]) {
      if (!gate_set.contains(g.kind)) {
        report(li, std::string(to_string(g.kind)) + " not in gate set " + gate_set.id);
      }
      claim(g.target);
      if (g.kind == GateKind::CNOT) {
        if (!g.control) {
          report(li, "CNOT without control");
        } else {
          if (*g.control == g.target) report(li, "CNOT control equals target");
          claim(*g.control);
          if (gate_set.cnot_adjacent_only && std::abs(*g.control - g.target) != 1) {
            report(li, "non-adjacent CNOT " + std::to_string(*g.control) + "->" +
                           std::to_string(g.target));
          }
        }
      } else if (g.control) {
        report(li, "control set on single-qubit gate");
      }
      if (is_parameterized(g.kind)) {
        if (!g.param_slot) {
          report(li, "rotation without param slot");
        } else if (*g.param_slot != next_slot) {
          report(li, "param slot " + std::to_string(*g.param_slot) + " out of order (expected " +
                         std::to_string(next_slot) + ")");
          next_slot = std::max(next_slot, *g.param_slot + 1);
        } else {
          ++next_slot;
        }
      } else if (g.param_slot) {
        report(li, "param slot on non-parameterized gate");
      }
    }
  }
  if (static_cast<std::size_t>(next_slot) != param_count) {
    out.push_back("expected " + std::to_string(next_slot) + " stored params, found " +
                  std::to_string(param_count));
  }
  return out;
}

std::size_t assign_param_slots(std::vector<Layer>& layers) {
  int next = 0;
  for (Layer& layer : layers) {
    sort_layer(layer);
    for (Gate& g : layer) {
      if (is_parameterized(g.kind)) {
        g.param_slot = next++;
      } else {
        g.param_slot.reset();
      }
    }
  }
  return static_cast<std::size_t>(next);
}

CircuitGenome::CircuitGenome(int n_qubits, GateSet gate_set, std::vector<Layer> layers,
                             std::vector<double> params)
    : n_qubits_(n_qubits),
      gate_set_(std::move(gate_set)),
      layers_(std::move(layers)),
      params_(std::move(params)) {
  if (n_qubits_ > kMaxQubits) {
    throw CapacityError("circuit has " + std::to_string(n_qubits_) + " qubits; limit is " +
                        std::to_string(kMaxQubits));
  }
  if (n_qubits_ < 1) throw StructuralError("circuit needs at least one qubit");
  for (Layer& layer : layers_) sort_layer(layer);
  const auto violations = find_violations(n_qubits_, gate_set_, layers_, params_.size());
  if (!violations.empty()) throw StructuralError("invalid circuit: " + violations.front());
}

std::size_t CircuitGenome::gate_count() const noexcept {
  std::size_t n = 0;
  for (const Layer& layer : layers_) n += layer.size();
  return n;
}

CircuitGenome CircuitGenome::with_params(std::vector<double> params) const {
  if (params.size() != params_.size()) {
    throw StructuralError("expected " + std::to_string(params_.size()) + " params, got " +
                          std::to_string(params.size()));
  }
  CircuitGenome copy = *this;
  copy.params_ = std::move(params);
  return copy;
}

bool CircuitGenome::same_structure(const CircuitGenome& other) const noexcept {
  return n_qubits_ == other.n_qubits_ && gate_set_ == other.gate_set_ && layers_ == other.layers_;
}

}  // namespace qansatz
