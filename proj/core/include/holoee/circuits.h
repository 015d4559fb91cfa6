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

#ifndef HOLOEE_CIRCUITS_H
#define HOLOEE_CIRCUITS_H

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "holoee/qmath.h"

namespace holoee {

// Rotations follow R_A(theta) = exp(-i theta sigma_A / 2). S, X and Z are
// the Clifford extras the stabilizer backend also understands.
enum class GateKind { H, CZ, RX, RY, RZ, S, X, Z };

std::string gate_kind_name(GateKind kind);
GateKind parse_gate_kind(const std::string &name);

struct Gate {
    GateKind kind;
    std::vector<int> targets;
    double theta = 0.0;

    static Gate h(int q) { return make(GateKind::H, {q}); }
    static Gate s(int q) { return make(GateKind::S, {q}); }
    static Gate x(int q) { return make(GateKind::X, {q}); }
    static Gate z(int q) { return make(GateKind::Z, {q}); }
    static Gate cz(int a, int b) { return make(GateKind::CZ, {a, b}); }
    static Gate rx(int q, double theta) { return make(GateKind::RX, {q}, theta); }
    static Gate ry(int q, double theta) { return make(GateKind::RY, {q}, theta); }
    static Gate rz(int q, double theta) { return make(GateKind::RZ, {q}, theta); }
    /// Checks arity and distinct targets; throws ArgumentError.
    static Gate make(GateKind kind, std::vector<int> targets, double theta = 0.0);

    bool is_clifford() const;
    /// True when the gate is diagonal in the computational basis.
    bool is_diagonal() const;
    bool operator==(const Gate &other) const = default;
};

class Circuit {
   public:
    explicit Circuit(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    /// Appends after checking every target is below n_qubits.
    Circuit &add(Gate gate);

   private:
    int n_qubits_;
    std::vector<Gate> gates_;
};

/// Simple undirected graph; edges stored as (low, high) pairs in lexicographic order.
class Graph {
   public:
    using Edge = std::pair<int, int>;

    explicit Graph(int n_vertices);
    Graph(int n_vertices, const std::vector<Edge> &edges);
    /// Circulant graph: i ~ i + offset (mod n) for each offset.
    static Graph circulant(int n_vertices, const std::vector<int> &offsets);

    int n_vertices() const { return n_vertices_; }
    const std::set<Edge> &edges() const { return edges_; }
    std::vector<Edge> edge_list() const { return {edges_.begin(), edges_.end()}; }
    bool has_edge(int a, int b) const;
    std::vector<int> neighbors(int v) const;
    /// Throws ArgumentError on self-loops, duplicates or out-of-range vertices.
    Graph &add_edge(int a, int b);

    bool operator==(const Graph &other) const = default;

   private:
    int n_vertices_;
    std::set<Edge> edges_;
};

/// 2x2 unitary of a single-qubit gate.
Eigen::Matrix2cd single_qubit_unitary(const Gate &gate);

/// Applies one gate in place to a raw amplitude vector of n qubits.
void apply_gate(Eigen::VectorXcd &amplitudes, int n_qubits, const Gate &gate);
/// Conjugates a density matrix in place by one gate: rho -> G rho G^dagger.
void apply_gate(Eigen::MatrixXcd &rho, int n_qubits, const Gate &gate);

StateVector run(const Circuit &circuit, const StateVector &initial);

/// H on every vertex, then one CZ per edge in lexicographic edge order.
Circuit graph_state_circuit(const Graph &graph);
StateVector graph_state(const Graph &graph);

struct PerfectTensorReport {
    bool is_perfect = false;
    double worst_deviation = 0.0;
    /// The three-qubit subset with the worst deviation, when the check fails.
    std::optional<std::array<int, 3>> failing_subset;
};

inline constexpr double kPerfectTensorTolerance = 1e-9;

/// Every three-qubit reduced matrix of a six-qubit state must equal I/8 entrywise.
PerfectTensorReport is_perfect_tensor(const StateVector &state);

/// Deterministic search for a six-vertex graph whose graph state is a perfect tensor.
/// Circulant graphs are tried first, by offset set over {1, 2, 3} in lexicographic order;
/// if none passes, all 2^15 graphs are scanned and the lexicographically smallest
/// passing edge list is returned.
Graph search_perfect_graph(int n_vertices = 6);

/// search_perfect_graph(6), computed once.
const Graph &perfect_graph();

struct TriplesReport {
    /// maximally_mixed[k] is true when every k-qubit reduced matrix equals I/2^k (k = 1..3).
    std::array<bool, 4> maximally_mixed{};
    /// "all triples maximally mixed" implies "all singles and pairs maximally mixed".
    bool implication_holds = false;
};

TriplesReport sufficiency_of_triples(const StateVector &state);

}  // namespace holoee

#endif  // HOLOEE_CIRCUITS_H
