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

#include "qansatz/circuit_io.hpp"

#include <nlohmann/json.hpp>

#include "qansatz/errors.hpp"
#include "qansatz/report.hpp"

namespace qansatz {

namespace {

using json = nlohmann::ordered_json;

json gate_to_json(const Gate& g) {
  json j;
  j["kind"] = std::string(to_string(g.kind));
  if (g.control) j["control"] = *g.control;
  j["target"] = g.target;
  if (g.param_slot) j["param_slot"] = *g.param_slot;
  return j;
}

Gate gate_from_json(const json& j, const std::string& at) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("target")) {
    throw ParseError(at + " needs \"kind\" and \"target\"");
  }
  const auto kind = parse_gate_kind(j["kind"].get<std::string>());
  if (!kind) throw ParseError(at + ": unknown gate kind " + j["kind"].dump());
  Gate g;
  g.kind = *kind;
  g.target = j["target"].get<int>();
  if (j.contains("control") && !j["control"].is_null()) g.control = j["control"].get<int>();
  if (j.contains("param_slot") && !j["param_slot"].is_null()) {
    g.param_slot = j["param_slot"].get<int>();
  }
  return g;
}

GateSet gate_set_from_json(const json& j, const std::string& at) {
  if (j.is_string()) return GateSet::parse(j.get<std::string>());
  if (!j.is_object()) throw ParseError(at + " must be an object or a gate set id");
  GateSet gs;
  gs.id = j.value("id", std::string("custom"));
  for (const auto& name : j.at("gates")) {
    const auto kind = parse_gate_kind(name.get<std::string>());
    if (!kind || *kind == GateKind::CNOT) {
      throw ParseError(at + ".gates: invalid single-qubit gate " + name.dump());
    }
    gs.single_qubit_gates.push_back(*kind);
  }
  gs.cnot_adjacent_only = j.at("cnot_adjacent_only").get<bool>();
  gs.initial_h_layer = j.at("initial_h_layer").get<bool>();
  return gs;
}

}  // namespace

std::string circuit_to_json(const CircuitGenome& genome, const CircuitProvenance& provenance) {
  json doc;
  doc["n_qubits"] = genome.n_qubits();
  const GateSet& gs = genome.gate_set();
  json gates = json::array();
  for (const auto k : gs.single_qubit_gates) gates.push_back(std::string(to_string(k)));
  doc["gate_set"] = {{"id", gs.id},
                     {"gates", std::move(gates)},
                     {"cnot_adjacent_only", gs.cnot_adjacent_only},
                     {"initial_h_layer", gs.initial_h_layer}};
  json layers = json::array();
  for (const Layer& layer : genome.layers()) {
    json l = json::array();
    for (const Gate& g : layer) l.push_back(gate_to_json(g));
    layers.push_back(std::move(l));
  }
  doc["layers"] = std::move(layers);
  doc["params"] = genome.params();
  json prov;
  prov["seed"] = provenance.seed ? json(*provenance.seed) : json(nullptr);
  prov["generation"] = provenance.generation ? json(*provenance.generation) : json(nullptr);
  prov["jsd"] = provenance.jsd ? json(*provenance.jsd) : json(nullptr);
  doc["provenance"] = std::move(prov);
  return doc.dump(1) + "\n";
}

CircuitFile parse_circuit(std::string_view json_text, std::string_view origin) {
  const std::string where(origin);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError(where + ": top level must be an object");
    const int n = doc.at("n_qubits").get<int>();
    GateSet gs = gate_set_from_json(doc.at("gate_set"), where + ": gate_set");
    std::vector<Layer> layers;
    const auto& raw_layers = doc.at("layers");
    for (std::size_t li = 0; li < raw_layers.size(); ++li) {
      Layer layer;
      const auto& raw = raw_layers[li];
      for (std::size_t gi = 0; gi < raw.size(); ++gi) {
        layer.push_back(gate_from_json(
            raw[gi], where + ": layers[" + std::to_string(li) + "][" + std::to_string(gi) + "]"));
      }
      layers.push_back(std::move(layer));
    }
    std::vector<double> params;
    if (doc.contains("params")) params = doc["params"].get<std::vector<double>>();
    CircuitProvenance prov;
    if (doc.contains("provenance") && doc["provenance"].is_object()) {
      const auto& p = doc["provenance"];
      if (p.contains("seed") && p["seed"].is_number()) prov.seed = p["seed"].get<std::uint64_t>();
      if (p.contains("generation") && p["generation"].is_number()) {
        prov.generation = p["generation"].get<int>();
      }
      if (p.contains("jsd") && p["jsd"].is_number()) prov.jsd = p["jsd"].get<double>();
    }
    return {CircuitGenome(n, std::move(gs), std::move(layers), std::move(params)), prov};
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

CircuitFile load_circuit(const std::filesystem::path& path) {
  return parse_circuit(read_file(path), path.string());
}

}  // namespace qansatz
