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

#include "holoee/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "holoee/errors.h"

namespace holoee {

using nlohmann::json;

namespace {

template <typename Fn>
auto parsing(const char *what, Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed ") + what + ": " + e.what());
    } catch (const ArgumentError &e) {
        throw ConfigError(std::string("invalid ") + what + ": " + e.what());
    } catch (const ValidationError &e) {
        throw ConfigError(std::string("invalid ") + what + ": " + e.what());
    } catch (const UnsupportedScaleError &e) {
        throw ConfigError(std::string("invalid ") + what + ": " + e.what());
    }
}

json leg_to_json(LegRef r) { return json::array({r.node, r.leg}); }

LegRef leg_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw ConfigError("leg reference must be [node, leg]");
    }
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

}  // namespace

json graph_to_json(const Graph &graph) {
    json edges = json::array();
    for (auto [a, b] : graph.edges()) {
        edges.push_back(json::array({a, b}));
    }
    return {{"n_vertices", graph.n_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const json &j) {
    return parsing("graph", [&] {
        Graph g(j.at("n_vertices").get<int>());
        for (const auto &e : j.at("edges")) {
            g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        }
        return g;
    });
}

json circuit_to_json(const Circuit &circuit) {
    json gates = json::array();
    for (const Gate &g : circuit.gates()) {
        json entry = {{"kind", gate_kind_name(g.kind)}, {"targets", g.targets}};
        if (g.kind == GateKind::RX || g.kind == GateKind::RY || g.kind == GateKind::RZ) {
            entry["angle"] = g.theta;
        }
        gates.push_back(entry);
    }
    return {{"n_qubits", circuit.n_qubits()}, {"gates", gates}};
}

Circuit circuit_from_json(const json &j) {
    return parsing("circuit", [&] {
        Circuit c(j.at("n_qubits").get<int>());
        for (const auto &g : j.at("gates")) {
            c.add(Gate::make(parse_gate_kind(g.at("kind").get<std::string>()), g.at("targets").get<std::vector<int>>(),
                             g.value("angle", 0.0)));
        }
        return c;
    });
}

json state_to_json(const StateVector &state) {
    std::vector<double> re, im;
    for (std::size_t i = 0; i < state.dim(); i++) {
        re.push_back(state[i].real());
        im.push_back(state[i].imag());
    }
    return {{"n_qubits", state.n_qubits()}, {"real", re}, {"imag", im}};
}

StateVector state_from_json(const json &j) {
    return parsing("state", [&] {
        auto re = j.at("real").get<std::vector<double>>();
        auto im = j.at("imag").get<std::vector<double>>();
        if (re.size() != im.size()) {
            throw ConfigError("state real/imag lengths differ");
        }
        Eigen::VectorXcd amps(static_cast<Eigen::Index>(re.size()));
        for (std::size_t i = 0; i < re.size(); i++) {
            amps[static_cast<Eigen::Index>(i)] = Complex(re[i], im[i]);
        }
        return StateVector(j.at("n_qubits").get<int>(), std::move(amps));
    });
}

json density_to_json(const DensityMatrix &rho) {
    json re = json::array(), im = json::array();
    for (std::size_t r = 0; r < rho.dim(); r++) {
        std::vector<double> row_re, row_im;
        for (std::size_t c = 0; c < rho.dim(); c++) {
            row_re.push_back(rho(r, c).real());
            row_im.push_back(rho(r, c).imag());
        }
        re.push_back(row_re);
        im.push_back(row_im);
    }
    return {{"n_qubits", rho.n_qubits()}, {"real", re}, {"imag", im}};
}

DensityMatrix density_from_json(const json &j) {
    return parsing("density matrix", [&] {
        auto re = j.at("real").get<std::vector<std::vector<double>>>();
        auto im = j.at("imag").get<std::vector<std::vector<double>>>();
        auto d = static_cast<Eigen::Index>(re.size());
        Eigen::MatrixXcd m(d, d);
        if (im.size() != re.size()) {
            throw ConfigError("density matrix real/imag shapes differ");
        }
        for (Eigen::Index r = 0; r < d; r++) {
            const auto &rr = re[static_cast<std::size_t>(r)];
            const auto &ir = im[static_cast<std::size_t>(r)];
            if (static_cast<Eigen::Index>(rr.size()) != d || ir.size() != rr.size()) {
                throw ConfigError("density matrix must be square");
            }
            for (Eigen::Index c = 0; c < d; c++) {
                m(r, c) = Complex(rr[static_cast<std::size_t>(c)], ir[static_cast<std::size_t>(c)]);
            }
        }
        return DensityMatrix(j.at("n_qubits").get<int>(), std::move(m));
    });
}

json network_to_json(const TensorNetwork &tn) {
    json nodes = json::array();
    for (const auto &node : tn.nodes) {
        json entry = {{"id", node.id}};
        if (node.is_graph_state()) {
            entry["graph"] = graph_to_json(std::get<Graph>(node.tensor));
        } else {
            entry["state"] = state_to_json(std::get<StateVector>(node.tensor));
        }
        nodes.push_back(entry);
    }
    json links = json::array();
    for (const Link &l : tn.links) {
        links.push_back({{"a", leg_to_json(l.a)}, {"b", leg_to_json(l.b)}});
    }
    json dangling = json::array();
    for (LegRef r : tn.dangling) {
        dangling.push_back(leg_to_json(r));
    }
    return {{"schema_version", kNetworkSchemaVersion}, {"nodes", nodes}, {"links", links}, {"dangling", dangling}};
}

TensorNetwork network_from_json(const json &j) {
    TensorNetwork tn = parsing("network", [&] {
        int version = j.at("schema_version").get<int>();
        if (version != kNetworkSchemaVersion) {
            throw ConfigError("unsupported network schema_version " + std::to_string(version));
        }
        TensorNetwork out;
        for (const auto &n : j.at("nodes")) {
            std::string id = n.value("id", "node" + std::to_string(out.nodes.size()));
            if (n.contains("graph")) {
                out.nodes.push_back({id, graph_from_json(n.at("graph"))});
            } else if (n.contains("state")) {
                out.nodes.push_back({id, state_from_json(n.at("state"))});
            } else {
                throw ConfigError("node '" + id + "' needs a graph or a state");
            }
        }
        for (const auto &l : j.at("links")) {
            out.links.push_back({leg_from_json(l.at("a")), leg_from_json(l.at("b"))});
        }
        for (const auto &d : j.at("dangling")) {
            out.dangling.push_back(leg_from_json(d));
        }
        return out;
    });
    auto violations = validate(tn);
    if (!violations.empty()) {
        std::string msg = "invalid network:";
        for (const auto &v : violations) {
            msg += " " + v + ";";
        }
        throw ConfigError(msg);
    }
    return tn;
}

json mincut_to_json(const MinCutResult &result, const CutProblem &problem) {
    json labels = json::array();
    for (int id : result.cut_edges) {
        labels.push_back(problem.edge_label(id));
    }
    return {{"value", result.value}, {"cut_edges", result.cut_edges}, {"cut_labels", labels}};
}

json config_to_json(const NmrSystemConfig &cfg) {
    return {{"n_spins", cfg.n_spins},
            {"nu", cfg.nu},
            {"J", cfg.J},
            {"t2star", cfg.t2star},
            {"dt", cfg.dt},
            {"gate_durations", cfg.gate_durations},
            {"total_budget_s", cfg.total_budget_s}};
}

NmrSystemConfig config_from_json(const json &j) {
    NmrSystemConfig cfg = parsing("config", [&] {
        if (!j.is_object()) {
            throw ConfigError("config must be a JSON object");
        }
        static const char *known[] = {"n_spins", "nu", "J", "t2star", "dt", "gate_durations", "total_budget_s"};
        for (const auto &[key, value] : j.items()) {
            if (!key.empty() && key.front() == '_') {
                continue;
            }
            if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
        NmrSystemConfig c = NmrSystemConfig::defaults();
        c.n_spins = j.value("n_spins", c.n_spins);
        if (j.contains("nu")) c.nu = j.at("nu").get<std::vector<double>>();
        if (j.contains("J")) c.J = j.at("J").get<std::vector<std::vector<double>>>();
        if (j.contains("t2star")) c.t2star = j.at("t2star").get<std::vector<double>>();
        c.dt = j.value("dt", c.dt);
        if (j.contains("gate_durations")) c.gate_durations = j.at("gate_durations").get<std::map<std::string, double>>();
        c.total_budget_s = j.value("total_budget_s", c.total_budget_s);
        return c;
    });
    cfg.validate();
    return cfg;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw ConfigError("cannot parse " + path + ": " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write " + path);
    }
    out << contents;
}

}  // namespace holoee
