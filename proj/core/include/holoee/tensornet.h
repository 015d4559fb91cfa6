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

#ifndef HOLOEE_TENSORNET_H
#define HOLOEE_TENSORNET_H

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "holoee/circuits.h"
#include "holoee/qmath.h"
#include "holoee/stabilizer.h"

namespace holoee {

inline constexpr int kLegsPerNode = 6;

struct LegRef {
    int node = 0;
    int leg = 0;
    auto operator<=>(const LegRef &) const = default;
};

/// Internal link: a Bell pair whose ends are contracted with two node legs.
struct Link {
    LegRef a;
    LegRef b;
    bool operator==(const Link &) const = default;
};

/// A rank-6 node: either a graph-state spec or an explicit six-qubit state (dense backend only).
struct TensorNode {
    std::string id;
    std::variant<Graph, StateVector> tensor;

    bool is_graph_state() const { return std::holds_alternative<Graph>(tensor); }
    StateVector dense_state() const;
};

struct TensorNetwork {
    std::vector<TensorNode> nodes;
    std::vector<Link> links;
    /// Boundary qubit i is dangling[i].
    std::vector<LegRef> dangling;

    int boundary_size() const { return static_cast<int>(dangling.size()); }
};

/// Subset of boundary positions (indices into TensorNetwork::dangling).
struct BoundaryRegion {
    std::vector<int> indices;

    /// Throws ArgumentError on duplicates or indices outside [0, boundary_size).
    void check(int boundary_size) const;
    BoundaryRegion complement(int boundary_size) const;
    /// Cyclic window of `length` positions starting at `start`.
    static BoundaryRegion contiguous(int start, int length, int boundary_size);
};

/// Every invariant violation, not just the first; empty means valid.
std::vector<std::string> validate(const TensorNetwork &tn);

/// layers = 0: one node with six dangling legs. layers = 1: a central node whose leg i is
/// linked to leg 0 of outer node i + 1; the 30 dangling legs run over outer nodes 1..6,
/// legs 1..5 each. Throws UnsupportedScaleError for layers > 1.
TensorNetwork build_hexagonal_tn(int layers, const Graph &tensor_graph);
TensorNetwork build_hexagonal_tn(int layers);

/// Two nodes with leg 5 of node 0 linked to leg 0 of node 1 (10 boundary legs).
TensorNetwork build_two_node_chain(const Graph &tensor_graph);

struct DenseContraction {
    StateVector state;
    /// Norm of the boundary vector before renormalization, with every link applied as
    /// the normalized Bell bra.
    double norm_factor;
};

/// Qubits across all nodes must not exceed kMaxStateQubits.
DenseContraction contract_dense(const TensorNetwork &tn);

/// Requires graph-state nodes. Result qubits follow the dangling order.
StabilizerTableau contract_stabilizer(const TensorNetwork &tn);

enum class Backend { Dense, Stabilizer };

std::string backend_name(Backend backend);
Backend parse_backend(const std::string &name);

double boundary_entropy(const TensorNetwork &tn, const BoundaryRegion &region, Backend backend);

/// Renyi-2 entropy from the two-replica swap contraction of the unnormalized boundary state,
/// -log2(tr rho_A^2 / (tr rho_A)^2).
double renyi2_via_replica(const TensorNetwork &tn, const BoundaryRegion &region);

}  // namespace holoee

#endif  // HOLOEE_TENSORNET_H
