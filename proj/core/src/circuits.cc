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

#include "holoee/circuits.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "holoee/errors.h"

namespace holoee {

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::CZ:
            return "CZ";
        case GateKind::RX:
            return "RX";
        case GateKind::RY:
            return "RY";
        case GateKind::RZ:
            return "RZ";
        case GateKind::S:
            return "S";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
    }
    throw InternalError("gate_kind_name: unknown kind");
}

GateKind parse_gate_kind(const std::string &name) {
    for (GateKind k : {GateKind::H, GateKind::CZ, GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::S, GateKind::X,
                       GateKind::Z}) {
        if (gate_kind_name(k) == name) {
            return k;
        }
    }
    throw ArgumentError("unknown gate kind '" + name + "'");
}

Gate Gate::make(GateKind kind, std::vector<int> targets, double theta) {
    std::size_t arity = kind == GateKind::CZ ? 2 : 1;
    if (targets.size() != arity) {
        throw ArgumentError(gate_kind_name(kind) + " takes " + std::to_string(arity) + " target(s)");
    }
    if (arity == 2 && targets[0] == targets[1]) {
        throw ArgumentError("CZ targets must be distinct");
    }
    for (int t : targets) {
        if (t < 0) {
            throw ArgumentError("negative gate target");
        }
    }
    if (!std::isfinite(theta)) {
        throw ArgumentError("non-finite rotation angle");
    }
    return Gate{kind, std::move(targets), theta};
}

bool Gate::is_clifford() const {
    switch (kind) {
        case GateKind::H:
        case GateKind::CZ:
        case GateKind::S:
        case GateKind::X:
        case GateKind::Z:
            return true;
        default:
            return false;
    }
}

bool Gate::is_diagonal() const {
    switch (kind) {
        case GateKind::CZ:
        case GateKind::RZ:
        case GateKind::S:
        case GateKind::Z:
            return true;
        default:
            return false;
    }
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 0) {
        throw ArgumentError("Circuit: negative qubit count");
    }
}

Circuit &Circuit::add(Gate gate) {
    for (int t : gate.targets) {
        if (t >= n_qubits_) {
            throw ArgumentError("Circuit: target " + std::to_string(t) + " out of range for " +
                                std::to_string(n_qubits_) + " qubits");
        }
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Graph::Graph(int n_vertices) : n_vertices_(n_vertices) {
    if (n_vertices < 0) {
        throw ArgumentError("Graph: negative vertex count");
    }
}

Graph::Graph(int n_vertices, const std::vector<Edge> &edges) : Graph(n_vertices) {
    for (auto [a, b] : edges) {
        add_edge(a, b);
    }
}

Graph Graph::circulant(int n_vertices, const std::vector<int> &offsets) {
    Graph g(n_vertices);
    for (int off : offsets) {
        for (int i = 0; i < n_vertices; i++) {
            int j = (i + off) % n_vertices;
            if (j != i && !g.has_edge(i, j)) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

bool Graph::has_edge(int a, int b) const { return edges_.count({std::min(a, b), std::max(a, b)}) > 0; }

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges_) {
        if (a == v) {
            out.push_back(b);
        } else if (b == v) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph &Graph::add_edge(int a, int b) {
    if (a == b) {
        throw ArgumentError("Graph: self-loop on vertex " + std::to_string(a));
    }
    if (a < 0 || b < 0 || a >= n_vertices_ || b >= n_vertices_) {
        throw ArgumentError("Graph: edge endpoint out of range");
    }
    if (!edges_.insert({std::min(a, b), std::max(a, b)}).second) {
        throw ArgumentError("Graph: duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    return *this;
}

Eigen::Matrix2cd single_qubit_unitary(const Gate &gate) {
    using namespace std::complex_literals;
    const double h = 1.0 / std::numbers::sqrt2;
    double c = std::cos(gate.theta / 2);
    double s = std::sin(gate.theta / 2);
    Eigen::Matrix2cd u;
    switch (gate.kind) {
        case GateKind::H:
            u << h, h, h, -h;
            break;
        case GateKind::S:
            u << 1.0, 0.0, 0.0, 1i;
            break;
        case GateKind::X:
            u << 0.0, 1.0, 1.0, 0.0;
            break;
        case GateKind::Z:
            u << 1.0, 0.0, 0.0, -1.0;
            break;
        case GateKind::RX:
            u << c, -1i * s, -1i * s, c;
            break;
        case GateKind::RY:
            u << c, -s, s, c;
            break;
        case GateKind::RZ:
            u << std::exp(-0.5i * gate.theta), 0.0, 0.0, std::exp(0.5i * gate.theta);
            break;
        case GateKind::CZ:
            throw ArgumentError("single_qubit_unitary: CZ is a two-qubit gate");
    }
    return u;
}

namespace {

// Applies the gate to a strided vector of length 2^n (stride 1 for columns, rows() for rows).
void apply_strided(Complex *data, std::ptrdiff_t stride, int n_qubits, const Gate &gate, bool conjugate) {
    std::uint64_t dim = std::uint64_t{1} << n_qubits;
    for (int t : gate.targets) {
        if (t >= n_qubits) {
            throw ArgumentError("apply_gate: target out of range");
        }
    }
    auto at = [&](std::uint64_t i) -> Complex & { return data[static_cast<std::ptrdiff_t>(i) * stride]; };
    if (gate.kind == GateKind::CZ) {
        std::uint64_t both = (std::uint64_t{1} << (n_qubits - 1 - gate.targets[0])) |
                             (std::uint64_t{1} << (n_qubits - 1 - gate.targets[1]));
        for (std::uint64_t i = 0; i < dim; i++) {
            if ((i & both) == both) {
                at(i) = -at(i);
            }
        }
        return;
    }
    Eigen::Matrix2cd u = single_qubit_unitary(gate);
    if (conjugate) {
        u = u.conjugate().eval();
    }
    std::uint64_t mask = std::uint64_t{1} << (n_qubits - 1 - gate.targets[0]);
    for (std::uint64_t i = 0; i < dim; i++) {
        if (i & mask) {
            continue;
        }
        Complex a = at(i);
        Complex b = at(i | mask);
        at(i) = u(0, 0) * a + u(0, 1) * b;
        at(i | mask) = u(1, 0) * a + u(1, 1) * b;
    }
}

}  // namespace

void apply_gate(Eigen::VectorXcd &amplitudes, int n_qubits, const Gate &gate) {
    if (amplitudes.size() != (Eigen::Index{1} << n_qubits)) {
        throw ArgumentError("apply_gate: dimension mismatch");
    }
    apply_strided(amplitudes.data(), 1, n_qubits, gate, false);
}

void apply_gate(Eigen::MatrixXcd &rho, int n_qubits, const Gate &gate) {
    Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw ArgumentError("apply_gate: dimension mismatch");
    }
    for (Eigen::Index c = 0; c < dim; c++) {
        apply_strided(rho.col(c).data(), 1, n_qubits, gate, false);
    }
    for (Eigen::Index r = 0; r < dim; r++) {
        apply_strided(rho.data() + r, dim, n_qubits, gate, true);
    }
}

StateVector run(const Circuit &circuit, const StateVector &initial) {
    if (circuit.n_qubits() != initial.n_qubits()) {
        throw ArgumentError("run: circuit has " + std::to_string(circuit.n_qubits()) + " qubits, state has " +
                            std::to_string(initial.n_qubits()));
    }
    Eigen::VectorXcd amps = initial.amplitudes();
    for (const Gate &g : circuit.gates()) {
        apply_gate(amps, circuit.n_qubits(), g);
    }
    return StateVector::normalized(std::move(amps));
}

Circuit graph_state_circuit(const Graph &graph) {
    Circuit c(graph.n_vertices());
    for (int v = 0; v < graph.n_vertices(); v++) {
        c.add(Gate::h(v));
    }
    for (auto [a, b] : graph.edges()) {
        c.add(Gate::cz(a, b));
    }
    return c;
}

StateVector graph_state(const Graph &graph) {
    return run(graph_state_circuit(graph), StateVector::zeros(graph.n_vertices()));
}

namespace {

std::vector<QubitList> subsets_of_size(int n, int k) {
    std::vector<QubitList> out;
    QubitList cur;
    auto rec = [&](auto &self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int q = start; q < n; q++) {
            cur.push_back(q);
            self(self, q + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

double deviation_from_maximally_mixed(const StateVector &state, const QubitList &subset) {
    DensityMatrix rdm = partial_trace(state, subset);
    auto d = static_cast<Eigen::Index>(rdm.dim());
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
    return (rdm.entries() - target).cwiseAbs().maxCoeff();
}

// Worst deviation over all triples; stops early once it exceeds `stop_above`.
double worst_triple_deviation(const StateVector &state, double stop_above, QubitList *worst_subset) {
    double worst = 0.0;
    for (const QubitList &subset : subsets_of_size(state.n_qubits(), 3)) {
        double dev = deviation_from_maximally_mixed(state, subset);
        if (dev > worst) {
            worst = dev;
            if (worst_subset != nullptr) {
                *worst_subset = subset;
            }
        }
        if (worst > stop_above) {
            break;
        }
    }
    return worst;
}

}  // namespace

PerfectTensorReport is_perfect_tensor(const StateVector &state) {
    if (state.n_qubits() != 6) {
        throw ArgumentError("is_perfect_tensor: expected 6 qubits, got " + std::to_string(state.n_qubits()));
    }
    PerfectTensorReport report;
    QubitList worst;
    report.worst_deviation = worst_triple_deviation(state, std::numeric_limits<double>::infinity(), &worst);
    report.is_perfect = report.worst_deviation <= kPerfectTensorTolerance;
    if (!report.is_perfect) {
        report.failing_subset = std::array<int, 3>{worst[0], worst[1], worst[2]};
    }
    return report;
}

Graph search_perfect_graph(int n_vertices) {
    if (n_vertices != 6) {
        throw ArgumentError("search_perfect_graph: only 6 vertices are supported");
    }
    const std::vector<std::vector<int>> offset_sets = {{1}, {1, 2}, {1, 2, 3}, {1, 3}, {2}, {2, 3}, {3}};
    for (const auto &offsets : offset_sets) {
        Graph g = Graph::circulant(n_vertices, offsets);
        if (is_perfect_tensor(graph_state(g)).is_perfect) {
            return g;
        }
    }

    std::vector<Graph::Edge> pairs;
    for (int a = 0; a < n_vertices; a++) {
        for (int b = a + 1; b < n_vertices; b++) {
            pairs.emplace_back(a, b);
        }
    }
    std::optional<std::vector<Graph::Edge>> best;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); mask++) {
        std::vector<Graph::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); i++) {
            if ((mask >> i) & 1u) {
                edges.push_back(pairs[i]);
            }
        }
        if (best && !(edges < *best)) {
            continue;
        }
        Graph g(n_vertices, edges);
        if (worst_triple_deviation(graph_state(g), kPerfectTensorTolerance, nullptr) <= kPerfectTensorTolerance) {
            best = std::move(edges);
        }
    }
    if (!best) {
        throw InternalError("search_perfect_graph: no six-vertex perfect graph found");
    }
    return Graph(n_vertices, *best);
}

const Graph &perfect_graph() {
    static const Graph graph = search_perfect_graph(6);
    return graph;
}

TriplesReport sufficiency_of_triples(const StateVector &state) {
    if (state.n_qubits() != 6) {
        throw ArgumentError("sufficiency_of_triples: expected 6 qubits");
    }
    TriplesReport report;
    for (int k = 1; k <= 3; k++) {
        bool all_mixed = true;
        for (const QubitList &subset : subsets_of_size(6, k)) {
            if (deviation_from_maximally_mixed(state, subset) > kPerfectTensorTolerance) {
                all_mixed = false;
                break;
            }
        }
        report.maximally_mixed[static_cast<std::size_t>(k)] = all_mixed;
    }
    report.implication_holds =
        !report.maximally_mixed[3] || (report.maximally_mixed[1] && report.maximally_mixed[2]);
    return report;
}

}  // namespace holoee
