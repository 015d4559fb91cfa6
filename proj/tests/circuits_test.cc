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

#include <bit>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "holoee/errors.h"
#include "holoee/stabilizer.h"
#include "test_support.h"

namespace holoee {
namespace {

using testing::Rng;

// Frozen result of the perfect-graph search: the circulant graph with offsets {2, 3}.
const std::vector<Graph::Edge> kPerfectEdges = {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4},
                                                {1, 5}, {2, 4}, {2, 5}, {3, 5}};

TEST(Gate, validates_targets) {
    EXPECT_THROW(Gate::cz(1, 1), ArgumentError);
    EXPECT_THROW(Gate::make(GateKind::H, {0, 1}), ArgumentError);
    EXPECT_THROW(Gate::make(GateKind::CZ, {0}), ArgumentError);
    EXPECT_THROW(Gate::h(-1), ArgumentError);
    EXPECT_TRUE(Gate::cz(0, 1).is_clifford());
    EXPECT_FALSE(Gate::rx(0, 0.3).is_clifford());
    EXPECT_TRUE(Gate::rz(0, 0.3).is_diagonal());
    EXPECT_EQ(parse_gate_kind("CZ"), GateKind::CZ);
    EXPECT_EQ(gate_kind_name(GateKind::RY), "RY");
    EXPECT_THROW(parse_gate_kind("T"), ArgumentError);
}

TEST(Circuit, rejects_out_of_range_targets) {
    Circuit c(2);
    EXPECT_NO_THROW(c.add(Gate::cz(0, 1)));
    EXPECT_THROW(c.add(Gate::h(2)), ArgumentError);
}

TEST(Graph, enforces_simple_graph_invariants) {
    Graph g(3);
    g.add_edge(2, 0);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_THROW(g.add_edge(0, 2), ArgumentError);
    EXPECT_THROW(g.add_edge(1, 1), ArgumentError);
    EXPECT_THROW(g.add_edge(0, 3), ArgumentError);
    EXPECT_EQ(g.neighbors(0), std::vector<int>{2});
    EXPECT_EQ(Graph::circulant(6, {1, 2}).edges().size(), 12u);
    EXPECT_EQ(Graph::circulant(6, {3}).edges().size(), 3u);
}

TEST(Run, examples) {
    EXPECT_EQ(run(Circuit(1), StateVector::zeros(1)).amplitudes(), StateVector::zeros(1).amplitudes());

    Circuit h(1);
    h.add(Gate::h(0));
    StateVector plus = run(h, StateVector::zeros(1));
    EXPECT_NEAR(std::abs(plus[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(plus[1] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);

    Circuit c(2);
    c.add(Gate::h(0)).add(Gate::h(1)).add(Gate::cz(0, 1));
    StateVector out = run(c, StateVector::zeros(2));
    const Complex expected[4] = {0.5, 0.5, 0.5, -0.5};
    for (int i = 0; i < 4; i++) {
        EXPECT_NEAR(std::abs(out[static_cast<std::size_t>(i)] - expected[i]), 0.0, 1e-15);
    }

    EXPECT_THROW(run(c, StateVector::zeros(3)), ArgumentError);
}

TEST(Run, rotation_convention_is_exp_minus_i_theta_sigma_over_two) {
    Eigen::Matrix2cd rx = single_qubit_unitary(Gate::rx(0, std::numbers::pi));
    EXPECT_NEAR(std::abs(rx(0, 1) - Complex(0, -1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rx(0, 0)), 0.0, 1e-15);
    Eigen::Matrix2cd rz = single_qubit_unitary(Gate::rz(0, 0.4));
    EXPECT_NEAR(std::abs(rz(0, 0) - std::exp(Complex(0, -0.2))), 0.0, 1e-15);
    Eigen::Matrix2cd ry = single_qubit_unitary(Gate::ry(0, 0.4));
    EXPECT_NEAR(std::abs(ry(1, 0) - std::sin(0.2)), 0.0, 1e-15);
}

TEST(GraphStateCircuit, examples) {
    Circuit single = graph_state_circuit(Graph(1));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single.gates()[0], Gate::h(0));

    Graph edge(2);
    edge.add_edge(0, 1);
    Circuit pair = graph_state_circuit(edge);
    ASSERT_EQ(pair.size(), 3u);
    EXPECT_EQ(pair.gates()[0], Gate::h(0));
    EXPECT_EQ(pair.gates()[1], Gate::h(1));
    EXPECT_EQ(pair.gates()[2], Gate::cz(0, 1));

    Circuit c612 = graph_state_circuit(Graph::circulant(6, {1, 2}));
    int hs = 0, czs = 0;
    for (const Gate &g : c612.gates()) {
        (g.kind == GateKind::H ? hs : czs)++;
    }
    EXPECT_EQ(hs, 6);
    EXPECT_EQ(czs, 12);
    // CZ gates come in lexicographic edge order.
    for (std::size_t i = 7; i < c612.size(); i++) {
        EXPECT_LT(c612.gates()[i - 1].targets, c612.gates()[i].targets);
    }
}

TEST(PerfectTensor, rejects_product_and_ghz_states) {
    PerfectTensorReport zeros = is_perfect_tensor(StateVector::zeros(6));
    EXPECT_FALSE(zeros.is_perfect);
    ASSERT_TRUE(zeros.failing_subset.has_value());
    EXPECT_FALSE(is_perfect_tensor(testing::ghz6()).is_perfect);
    EXPECT_THROW(is_perfect_tensor(StateVector::zeros(5)), ArgumentError);
}

TEST(PerfectTensor, searched_graph_is_frozen_and_perfect) {
    Graph g = search_perfect_graph();
    EXPECT_EQ(g.edge_list(), kPerfectEdges);
    EXPECT_EQ(g, Graph::circulant(6, {2, 3}));
    EXPECT_EQ(perfect_graph(), g);
    PerfectTensorReport r = is_perfect_tensor(graph_state(g));
    EXPECT_TRUE(r.is_perfect);
    EXPECT_LT(r.worst_deviation, 1e-9);
    EXPECT_FALSE(r.failing_subset.has_value());
    EXPECT_THROW(search_perfect_graph(5), ArgumentError);
}

TEST(PerfectTensor, circulant_one_two_is_rejected) {
    // Regression fixture: the nearest-and-next-nearest ring is not perfect.
    PerfectTensorReport r = is_perfect_tensor(graph_state(Graph::circulant(6, {1, 2})));
    EXPECT_FALSE(r.is_perfect);
    ASSERT_TRUE(r.failing_subset.has_value());
    EXPECT_GT(r.worst_deviation, 0.1);
}

TEST(SufficiencyOfTriples, reports_per_size) {
    TriplesReport pt = sufficiency_of_triples(graph_state(perfect_graph()));
    EXPECT_TRUE(pt.maximally_mixed[1]);
    EXPECT_TRUE(pt.maximally_mixed[2]);
    EXPECT_TRUE(pt.maximally_mixed[3]);
    EXPECT_TRUE(pt.implication_holds);

    TriplesReport ghz = sufficiency_of_triples(testing::ghz6());
    EXPECT_TRUE(ghz.maximally_mixed[1]);
    EXPECT_FALSE(ghz.maximally_mixed[2]);
    EXPECT_FALSE(ghz.maximally_mixed[3]);
    EXPECT_TRUE(ghz.implication_holds);

    TriplesReport zeros = sufficiency_of_triples(StateVector::zeros(6));
    EXPECT_FALSE(zeros.maximally_mixed[1]);
}

TEST(CircuitProperties, run_preserves_norm) {
    Rng rng(17);
    std::uniform_real_distribution<double> angle(-4, 4);
    for (int trial = 0; trial < 20; trial++) {
        Circuit c = testing::random_clifford_circuit(5, 30, rng);
        c.add(Gate::rx(trial % 5, angle(rng))).add(Gate::ry(0, angle(rng))).add(Gate::rz(4, angle(rng)));
        StateVector out = run(c, testing::random_state(5, rng));
        EXPECT_NEAR(out.amplitudes().norm(), 1.0, 1e-12);
    }
}

TEST(CircuitProperties, cz_order_does_not_matter) {
    Rng rng(23);
    Circuit base = graph_state_circuit(perfect_graph());
    StateVector reference = run(base, StateVector::zeros(6));
    std::vector<Gate> gates = base.gates();
    for (int trial = 0; trial < 10; trial++) {
        std::shuffle(gates.begin() + 6, gates.end(), rng);
        Circuit c(6);
        for (const Gate &g : gates) {
            c.add(g);
        }
        EXPECT_LT((run(c, StateVector::zeros(6)).amplitudes() - reference.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(CircuitProperties, perfect_state_entropy_is_min_k_six_minus_k) {
    StateVector pt = graph_state(perfect_graph());
    for (unsigned mask = 1; mask < 63; mask++) {
        QubitList k;
        for (int q = 0; q < 6; q++) {
            if (mask >> q & 1u) {
                k.push_back(q);
            }
        }
        int size = std::popcount(mask);
        EXPECT_NEAR(von_neumann_entropy(partial_trace(pt, k)), std::min(size, 6 - size), 1e-9) << "mask " << mask;
    }
}

TEST(CircuitProperties, graph_states_match_stabilizer_backend) {
    Rng rng(31);
    for (int trial = 0; trial < 20; trial++) {
        int n = 1 + trial % 8;
        Graph g = testing::random_graph(n, rng);
        StateVector dense = graph_state(g);
        StateVector from_tableau = to_state_vector(from_graph(g));
        EXPECT_NEAR(testing::overlap_fidelity(dense, from_tableau), 1.0, 1e-9);
    }
}

}  // namespace
}  // namespace holoee
