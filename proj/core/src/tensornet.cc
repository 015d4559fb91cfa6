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

#include "holoee/tensornet.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "holoee/errors.h"

namespace holoee {

StateVector TensorNode::dense_state() const {
    if (const auto *g = std::get_if<Graph>(&tensor)) {
        return graph_state(*g);
    }
    return std::get<StateVector>(tensor);
}

void BoundaryRegion::check(int boundary_size) const {
    std::vector<bool> seen(static_cast<std::size_t>(boundary_size), false);
    for (int i : indices) {
        if (i < 0 || i >= boundary_size) {
            throw ArgumentError("boundary index " + std::to_string(i) + " out of range for " +
                                std::to_string(boundary_size) + " legs");
        }
        if (seen[static_cast<std::size_t>(i)]) {
            throw ArgumentError("duplicate boundary index " + std::to_string(i));
        }
        seen[static_cast<std::size_t>(i)] = true;
    }
}

BoundaryRegion BoundaryRegion::complement(int boundary_size) const {
    check(boundary_size);
    BoundaryRegion out;
    for (int i = 0; i < boundary_size; i++) {
        if (std::find(indices.begin(), indices.end(), i) == indices.end()) {
            out.indices.push_back(i);
        }
    }
    return out;
}

BoundaryRegion BoundaryRegion::contiguous(int start, int length, int boundary_size) {
    if (length < 0 || length > boundary_size || boundary_size <= 0) {
        throw ArgumentError("contiguous region length out of range");
    }
    BoundaryRegion r;
    for (int k = 0; k < length; k++) {
        r.indices.push_back(((start + k) % boundary_size + boundary_size) % boundary_size);
    }
    return r;
}

std::vector<std::string> validate(const TensorNetwork &tn) {
    std::vector<std::string> violations;
    int n_nodes = static_cast<int>(tn.nodes.size());
    for (int i = 0; i < n_nodes; i++) {
        const auto &node = tn.nodes[static_cast<std::size_t>(i)];
        int legs = node.is_graph_state() ? std::get<Graph>(node.tensor).n_vertices()
                                         : std::get<StateVector>(node.tensor).n_qubits();
        if (legs != kLegsPerNode) {
            violations.push_back("node " + std::to_string(i) + " exposes " + std::to_string(legs) +
                                 " legs instead of 6");
        }
    }
    std::map<LegRef, int> uses;
    auto describe = [](LegRef r) { return "(" + std::to_string(r.node) + "," + std::to_string(r.leg) + ")"; };
    auto record = [&](LegRef r) {
        if (r.node < 0 || r.node >= n_nodes || r.leg < 0 || r.leg >= kLegsPerNode) {
            violations.push_back("leg " + describe(r) + " does not exist");
            return;
        }
        uses[r]++;
    };
    for (std::size_t i = 0; i < tn.links.size(); i++) {
        const Link &l = tn.links[i];
        if (l.a == l.b) {
            violations.push_back("link " + std::to_string(i) + " connects leg " + describe(l.a) + " to itself");
        }
        record(l.a);
        record(l.b);
    }
    for (LegRef r : tn.dangling) {
        record(r);
    }
    for (int n = 0; n < n_nodes; n++) {
        for (int leg = 0; leg < kLegsPerNode; leg++) {
            LegRef r{n, leg};
            auto it = uses.find(r);
            int count = it == uses.end() ? 0 : it->second;
            if (count == 0) {
                violations.push_back("leg " + describe(r) + " is neither linked nor dangling");
            } else if (count > 1) {
                violations.push_back("leg " + describe(r) + " multiply used");
            }
        }
    }
    return violations;
}

namespace {

void require_valid(const TensorNetwork &tn) {
    auto violations = validate(tn);
    if (!violations.empty()) {
        std::string msg = "invalid tensor network:";
        for (const auto &v : violations) {
            msg += " " + v + ";";
        }
        throw ArgumentError(msg);
    }
}

int global_leg(LegRef r) { return kLegsPerNode * r.node + r.leg; }

}  // namespace

TensorNetwork build_hexagonal_tn(int layers, const Graph &tensor_graph) {
    if (layers < 0) {
        throw ArgumentError("build_hexagonal_tn: layers must be non-negative");
    }
    if (layers > 1) {
        throw UnsupportedScaleError("build_hexagonal_tn: only layers 0 and 1 are supported");
    }
    TensorNetwork tn;
    tn.nodes.push_back({"center", tensor_graph});
    if (layers == 0) {
        for (int leg = 0; leg < kLegsPerNode; leg++) {
            tn.dangling.push_back({0, leg});
        }
        return tn;
    }
    for (int i = 1; i <= kLegsPerNode; i++) {
        tn.nodes.push_back({"outer" + std::to_string(i - 1), tensor_graph});
        tn.links.push_back({{0, i - 1}, {i, 0}});
    }
    for (int i = 1; i <= kLegsPerNode; i++) {
        for (int leg = 1; leg < kLegsPerNode; leg++) {
            tn.dangling.push_back({i, leg});
        }
    }
    return tn;
}

TensorNetwork build_hexagonal_tn(int layers) { return build_hexagonal_tn(layers, perfect_graph()); }

TensorNetwork build_two_node_chain(const Graph &tensor_graph) {
    TensorNetwork tn;
    tn.nodes.push_back({"left", tensor_graph});
    tn.nodes.push_back({"right", tensor_graph});
    tn.links.push_back({{0, 5}, {1, 0}});
    for (int leg = 0; leg < 5; leg++) {
        tn.dangling.push_back({0, leg});
    }
    for (int leg = 1; leg < kLegsPerNode; leg++) {
        tn.dangling.push_back({1, leg});
    }
    return tn;
}

namespace {

struct RawBoundary {
    Eigen::VectorXcd amplitudes;
    int n_qubits;
};

// Contracts the network densely without renormalizing; qubits follow the dangling order.
RawBoundary contract_dense_raw(const TensorNetwork &tn) {
    require_valid(tn);
    int total = kLegsPerNode * static_cast<int>(tn.nodes.size());
    if (total > kMaxStateQubits) {
        throw UnsupportedScaleError("contract_dense: " + std::to_string(total) + " node qubits exceed the dense cap of " +
                                    std::to_string(kMaxStateQubits));
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Ones(1);
    for (const auto &node : tn.nodes) {
        StateVector state = node.dense_state();
        const Eigen::VectorXcd &s = state.amplitudes();
        Eigen::VectorXcd next(amps.size() * s.size());
        for (Eigen::Index i = 0; i < amps.size(); i++) {
            next.segment(i * s.size(), s.size()) = amps[i] * s;
        }
        amps = std::move(next);
    }
    // labels[p] = global leg sitting at qubit position p (position 0 = most significant).
    std::vector<int> labels(static_cast<std::size_t>(total));
    for (int i = 0; i < total; i++) {
        labels[static_cast<std::size_t>(i)] = i;
    }
    const double bell = 1.0 / std::numbers::sqrt2;
    for (const Link &link : tn.links) {
        int n = static_cast<int>(labels.size());
        auto pos_a = static_cast<int>(std::find(labels.begin(), labels.end(), global_leg(link.a)) - labels.begin());
        auto pos_b = static_cast<int>(std::find(labels.begin(), labels.end(), global_leg(link.b)) - labels.begin());
        std::uint64_t bit_a = std::uint64_t{1} << (n - 1 - pos_a);
        std::uint64_t bit_b = std::uint64_t{1} << (n - 1 - pos_b);
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(amps.size() / 4);
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); i++) {
            bool xa = i & bit_a, xb = i & bit_b;
            if (xa != xb) {
                continue;
            }
            // Drop the two contracted bits, keeping the others in order.
            std::uint64_t out = 0;
            int dst = n - 3;
            for (int p = 0; p < n; p++) {
                if (p == pos_a || p == pos_b) {
                    continue;
                }
                if ((i >> (n - 1 - p)) & 1u) {
                    out |= std::uint64_t{1} << dst;
                }
                dst--;
            }
            next[static_cast<Eigen::Index>(out)] += bell * amps[static_cast<Eigen::Index>(i)];
        }
        amps = std::move(next);
        labels.erase(std::remove_if(labels.begin(), labels.end(),
                                    [&](int l) { return l == global_leg(link.a) || l == global_leg(link.b); }),
                     labels.end());
    }
    int b = static_cast<int>(labels.size());
    std::vector<int> source_pos;
    for (LegRef r : tn.dangling) {
        source_pos.push_back(
            static_cast<int>(std::find(labels.begin(), labels.end(), global_leg(r)) - labels.begin()));
    }
    Eigen::VectorXcd ordered(amps.size());
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); i++) {
        std::uint64_t out = 0;
        for (int q = 0; q < b; q++) {
            if ((i >> (b - 1 - source_pos[static_cast<std::size_t>(q)])) & 1u) {
                out |= std::uint64_t{1} << (b - 1 - q);
            }
        }
        ordered[static_cast<Eigen::Index>(out)] = amps[static_cast<Eigen::Index>(i)];
    }
    return {std::move(ordered), b};
}

}  // namespace

DenseContraction contract_dense(const TensorNetwork &tn) {
    RawBoundary raw = contract_dense_raw(tn);
    double norm = raw.amplitudes.norm();
    if (norm < 1e-12) {
        throw ContractionError("contract_dense: contraction annihilated the boundary state");
    }
    return {StateVector(raw.n_qubits, raw.amplitudes / norm), norm};
}

StabilizerTableau contract_stabilizer(const TensorNetwork &tn) {
    require_valid(tn);
    StabilizerTableau t = StabilizerTableau::zero_state(0);
    std::vector<int> labels;
    for (std::size_t i = 0; i < tn.nodes.size(); i++) {
        const auto *g = std::get_if<Graph>(&tn.nodes[i].tensor);
        if (g == nullptr) {
            throw ArgumentError("contract_stabilizer: node " + std::to_string(i) +
                                " is an explicit state; only the dense backend accepts it");
        }
        t = tensor_product(t, from_graph(*g));
        for (int leg = 0; leg < kLegsPerNode; leg++) {
            labels.push_back(global_leg({static_cast<int>(i), leg}));
        }
    }
    int link_label = kLegsPerNode * static_cast<int>(tn.nodes.size());
    for (std::size_t i = 0; i < tn.links.size(); i++) {
        t = tensor_product(t, bell_pair());
        labels.push_back(link_label + 2 * static_cast<int>(i));
        labels.push_back(link_label + 2 * static_cast<int>(i) + 1);
    }
    auto position = [&](int label) {
        return static_cast<int>(std::find(labels.begin(), labels.end(), label) - labels.begin());
    };
    auto contract_pair = [&](int label_a, int label_b) {
        t = postselect_bell(t, position(label_a), position(label_b));
        labels.erase(std::remove_if(labels.begin(), labels.end(),
                                    [&](int l) { return l == label_a || l == label_b; }),
                     labels.end());
    };
    for (std::size_t i = 0; i < tn.links.size(); i++) {
        const Link &link = tn.links[i];
        int end_a = link_label + 2 * static_cast<int>(i);
        try {
            contract_pair(global_leg(link.a), end_a);
            contract_pair(end_a + 1, global_leg(link.b));
        } catch (const ContractionError &e) {
            throw ContractionError("link " + std::to_string(i) + ": " + e.what());
        }
    }
    std::vector<int> order;
    for (LegRef r : tn.dangling) {
        order.push_back(position(global_leg(r)));
    }
    return t.permuted(order).canonical();
}

std::string backend_name(Backend backend) { return backend == Backend::Dense ? "dense" : "stabilizer"; }

Backend parse_backend(const std::string &name) {
    if (name == "dense") {
        return Backend::Dense;
    }
    if (name == "stabilizer") {
        return Backend::Stabilizer;
    }
    throw ArgumentError("unknown backend '" + name + "'");
}

double boundary_entropy(const TensorNetwork &tn, const BoundaryRegion &region, Backend backend) {
    region.check(tn.boundary_size());
    if (backend == Backend::Stabilizer) {
        return entanglement_entropy(contract_stabilizer(tn), region.indices);
    }
    return von_neumann_entropy(partial_trace(contract_dense(tn).state, region.indices));
}

double renyi2_via_replica(const TensorNetwork &tn, const BoundaryRegion &region) {
    region.check(tn.boundary_size());
    RawBoundary raw = contract_dense_raw(tn);
    int b = raw.n_qubits;
    BoundaryRegion rest = region.complement(b);
    // psi(a, e) with a over the region and e over its complement; the two replicas are joined
    // along the larger index set so the remaining overlap matrix is the small one.
    const QubitList &joined = region.indices.size() >= rest.indices.size() ? region.indices : rest.indices;
    const QubitList &open = region.indices.size() >= rest.indices.size() ? rest.indices : region.indices;
    auto index_of = [&](const QubitList &qubits, std::uint64_t local) {
        std::uint64_t full = 0;
        int k = static_cast<int>(qubits.size());
        for (int t = 0; t < k; t++) {
            if ((local >> (k - 1 - t)) & 1u) {
                full |= std::uint64_t{1} << (b - 1 - qubits[static_cast<std::size_t>(t)]);
            }
        }
        return full;
    };
    auto rows = Eigen::Index{1} << joined.size();
    auto cols = Eigen::Index{1} << open.size();
    Eigen::MatrixXcd psi(rows, cols);
    for (Eigen::Index j = 0; j < rows; j++) {
        for (Eigen::Index o = 0; o < cols; o++) {
            psi(j, o) = raw.amplitudes[static_cast<Eigen::Index>(
                index_of(joined, static_cast<std::uint64_t>(j)) | index_of(open, static_cast<std::uint64_t>(o)))];
        }
    }
    Eigen::MatrixXcd overlap = psi.adjoint() * psi;
    double swap_expectation = overlap.squaredNorm();
    double trace = raw.amplitudes.squaredNorm();
    if (trace < 1e-24) {
        throw ContractionError("renyi2_via_replica: contraction annihilated the boundary state");
    }
    return std::max(0.0, -std::log2(swap_expectation / (trace * trace)));
}

}  // namespace holoee
