// Copyright 2026 The holo-ee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLOEE_IO_H
#define HOLOEE_IO_H

#include <string>

#include <nlohmann/json.hpp>

#include "holoee/circuits.h"
#include "holoee/mincut.h"
#include "holoee/nmr.h"
#include "holoee/qmath.h"
#include "holoee/tensornet.h"

namespace holoee {

// JSON schemas shared by files and reports. Parsing failures throw ConfigError.

inline constexpr int kNetworkSchemaVersion = 1;

/// {"n_vertices": 6, "edges": [[0, 2], ...]}
nlohmann::json graph_to_json(const Graph &graph);
Graph graph_from_json(const nlohmann::json &j);

/// {"n_qubits": n, "gates": [{"kind": "H", "targets": [0]}, {"kind": "RX", "targets": [1], "angle": 0.5}]}
nlohmann::json circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const nlohmann::json &j);

/// {"n_qubits": n, "real": [...], "imag": [...]}
nlohmann::json state_to_json(const StateVector &state);
StateVector state_from_json(const nlohmann::json &j);

/// {"n_qubits": n, "real": [[...], ...], "imag": [[...], ...]}
nlohmann::json density_to_json(const DensityMatrix &rho);
DensityMatrix density_from_json(const nlohmann::json &j);

/// {"schema_version": 1, "nodes": [{"id": "c", "graph": {...}} | {"id": "c", "state": {...}}],
///  "links": [{"a": [node, leg], "b": [node, leg]}], "dangling": [[node, leg], ...]}
/// Networks that fail validation are rejected.
nlohmann::json network_to_json(const TensorNetwork &tn);
TensorNetwork network_from_json(const nlohmann::json &j);

/// {"value": v, "cut_edges": [ids], "cut_labels": ["link 0", ...]}
nlohmann::json mincut_to_json(const MinCutResult &result, const CutProblem &problem);

/// {"n_spins", "nu", "J", "t2star", "dt", "gate_durations", "total_budget_s"}; missing keys
/// fall back to NmrSystemConfig::defaults(). Keys starting with '_' are comments.
nlohmann::json config_to_json(const NmrSystemConfig &cfg);
NmrSystemConfig config_from_json(const nlohmann::json &j);

nlohmann::json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &contents);

}  // namespace holoee

#endif  // HOLOEE_IO_H
