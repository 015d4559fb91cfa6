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

#include "holoee/nmr.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "holoee/errors.h"
#include "test_support.h"

namespace holoee {
namespace {

using testing::max_abs_diff;
using testing::pure;
using testing::Rng;

constexpr double kPi = std::numbers::pi;

NmrSystemConfig quiet_config(int n, double t2star = 0.4) {
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    cfg.n_spins = n;
    cfg.nu.assign(static_cast<std::size_t>(n), 0.0);
    cfg.J.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    cfg.t2star.assign(static_cast<std::size_t>(n), t2star);
    return cfg;
}

DensityMatrix plus_state() {
    Circuit c(1);
    c.add(Gate::h(0));
    return pure(run(c, StateVector::zeros(1)));
}

DensityMatrix ideal_perfect() { return pure(graph_state(perfect_graph())); }

TEST(NmrConfig, validation) {
    EXPECT_NO_THROW(NmrSystemConfig::defaults().validate());
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    cfg.J[0][1] = 10.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = NmrSystemConfig::defaults();
    cfg.J[2][2] = 1.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = NmrSystemConfig::defaults();
    cfg.t2star[3] = 0.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = NmrSystemConfig::defaults();
    cfg.dt = -1.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = NmrSystemConfig::defaults();
    cfg.nu.pop_back();
    EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(InternalHamiltonian, examples) {
    NmrSystemConfig one = quiet_config(1);
    EXPECT_LT(internal_hamiltonian(one).cwiseAbs().maxCoeff(), 1e-15);
    one.nu = {100.0};
    Eigen::MatrixXcd h = internal_hamiltonian(one);
    EXPECT_NEAR(h(0, 0).real(), 100 * kPi, 1e-12);
    EXPECT_NEAR(h(1, 1).real(), -100 * kPi, 1e-12);

    NmrSystemConfig two = quiet_config(2);
    two.J[0][1] = two.J[1][0] = 50.0;
    Eigen::MatrixXcd h2 = internal_hamiltonian(two);
    const double signs[4] = {1, -1, -1, 1};
    for (int i = 0; i < 4; i++) {
        EXPECT_NEAR(h2(i, i).real(), 25 * kPi * signs[i], 1e-12);
    }
    EXPECT_LT(max_abs_diff(h2, Eigen::MatrixXcd(h2.diagonal().asDiagonal())), 1e-15);
}

TEST(EvolveSlice, zero_hamiltonian_without_noise_is_identity) {
    NmrSystemConfig cfg = quiet_config(1);
    DensityMatrix out = evolve_slice(plus_state(), cfg, PulseSlice::free_evolution(0.01), false);
    EXPECT_LT(max_abs_diff(out.entries(), plus_state().entries()), 1e-12);
}

TEST(EvolveSlice, single_qubit_coherence_decays_by_one_over_e) {
    NmrSystemConfig cfg = quiet_config(1, 0.4);
    DensityMatrix out = evolve_slice(plus_state(), cfg, PulseSlice::free_evolution(0.4), true);
    EXPECT_NEAR(out(0, 1).real() / 0.5, std::exp(-1.0), 1e-10);
    EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-12);
}

TEST(EvolveSlice, ghz_coherence_decays_by_exp_minus_point_nine) {
    NmrSystemConfig cfg = quiet_config(6, 0.4);
    DensityMatrix out = evolve_slice(pure(testing::ghz6()), cfg, PulseSlice::free_evolution(0.06), true);
    EXPECT_NEAR(out(0, 63).real() / 0.5, std::exp(-0.9), 1e-10);
    EXPECT_NEAR(std::exp(-0.9), 0.40656965974059911, 1e-15);
}

TEST(EvolveSlice, rejects_durations_off_the_dt_grid) {
    NmrSystemConfig cfg = quiet_config(1);
    EXPECT_THROW(evolve_slice(plus_state(), cfg, PulseSlice::free_evolution(1.5e-5), false), ValidationError);
    EXPECT_THROW(evolve_slice(pure(StateVector::zeros(2)), cfg, PulseSlice::free_evolution(1e-5), false),
                 ArgumentError);
}

TEST(EvolveSlice, preserves_trace_hermiticity_and_loses_purity) {
    Rng rng(9);
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    cfg.n_spins = 3;
    cfg.nu = {120.0, -340.0, 55.0};
    cfg.J = {{0, 12, 0}, {12, 0, 7}, {0, 7, 0}};
    cfg.t2star = {0.2, 0.3, 0.5};
    DensityMatrix rho = pure(testing::random_state(3, rng));
    double previous = purity(rho);
    for (int step = 0; step < 6; step++) {
        PulseSlice slice = step % 2 ? PulseSlice::free_evolution(2e-4)
                                    : PulseSlice::controlled(2e-4, {{250.0, 0.3}, {0.0, 0.0}, {120.0, 1.7}});
        rho = evolve_slice(rho, cfg, slice, true);
        EXPECT_NEAR(rho.entries().trace().real(), 1.0, 1e-12);
        EXPECT_LT(max_abs_diff(rho.entries(), rho.entries().adjoint()), 1e-12);
        double p = purity(rho);
        EXPECT_LE(p, previous + 1e-12);
        previous = p;
    }
}

TEST(EvolveSlice, decay_commutes_with_control_free_step) {
    Rng rng(10);
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    DensityMatrix rho = testing::random_density(6, rng);
    double dt = cfg.dt;
    Eigen::VectorXcd phase = (internal_hamiltonian(cfg).diagonal() * Complex(0, -dt)).array().exp();
    Eigen::MatrixXcd u = phase.asDiagonal();
    Eigen::MatrixXd decay = dephasing_factors(cfg.t2star, std::vector<double>(6, dt));
    Eigen::MatrixXcd unitary_then_decay = (u * rho.entries() * u.adjoint()).cwiseProduct(decay.cast<Complex>());
    Eigen::MatrixXcd decay_then_unitary = u * rho.entries().cwiseProduct(decay.cast<Complex>()) * u.adjoint();
    EXPECT_LT(max_abs_diff(unitary_then_decay, decay_then_unitary), 1e-12);
    DensityMatrix stepped = evolve_slice(rho, cfg, PulseSlice::free_evolution(dt), true);
    EXPECT_LT(max_abs_diff(stepped.entries(), unitary_then_decay), 1e-12);
}

TEST(EvolveSlice, identity_circuit_keeps_diagonal) {
    Rng rng(12);
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    DensityMatrix rho = testing::random_density(6, rng);
    DensityMatrix out = evolve_slice(rho, cfg, PulseSlice::free_evolution(0.01), true);
    EXPECT_LT((out.entries().diagonal() - rho.entries().diagonal()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Compile, examples) {
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    PulseSequence empty = compile_circuit_to_sequence(Circuit(6), cfg, cfg.gate_durations);
    EXPECT_TRUE(empty.slices.empty());
    EXPECT_EQ(empty.total_duration(), 0.0);

    PulseSequence pt = compile_circuit_to_sequence(graph_state_circuit(perfect_graph()), cfg, cfg.gate_durations);
    EXPECT_NEAR(pt.total_duration(), 0.060, 1e-12);

    Circuit one_h(1);
    one_h.add(Gate::h(0));
    PulseSequence h = compile_circuit_to_sequence(one_h, quiet_config(1), {{"H", 0.001}});
    ASSERT_EQ(h.slices.size(), 101u);
    for (std::size_t i = 0; i < 100; i++) {
        EXPECT_FALSE(h.slices[i].is_marker());
        EXPECT_NEAR(h.slices[i].duration, 1e-5, 1e-18);
    }
    EXPECT_TRUE(h.slices[100].is_marker());
    EXPECT_EQ(h.slices[100].duration, 0.0);
    EXPECT_NEAR(h.total_duration(), 0.001, 1e-12);

    EXPECT_THROW(compile_circuit_to_sequence(one_h, quiet_config(1), {{"CZ", 0.001}}), ConfigError);
}

TEST(RunNoisyCircuit, noiseless_run_is_the_ideal_state) {
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    DensityMatrix out = run_noisy_circuit(graph_state_circuit(perfect_graph()), cfg, false);
    EXPECT_NEAR(fidelity(out, ideal_perfect()), 1.0, 1e-9);
}

TEST(RunNoisyCircuit, default_dephasing_lands_in_the_bracket) {
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    double f = fidelity(run_noisy_circuit(graph_state_circuit(perfect_graph()), cfg, true), ideal_perfect());
    EXPECT_GT(f, 0.85);
    EXPECT_LT(f, 1.0);
    // Regression value for the default schedule (H 7 ms, CZ 2 ms, T2* 0.4 s).
    EXPECT_NEAR(f, 0.8782382, 1e-6);
}

TEST(RunNoisyCircuit, infinite_t2star_matches_noiseless) {
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    cfg.t2star.assign(6, 1e15);
    Circuit c = graph_state_circuit(perfect_graph());
    EXPECT_LT(max_abs_diff(run_noisy_circuit(c, cfg, true).entries(), run_noisy_circuit(c, cfg, false).entries()),
              1e-9);
}

TEST(RunNoisyCircuit, rotations_follow_the_circuit_model) {
    NmrSystemConfig cfg = quiet_config(2);
    cfg.nu = {300.0, -120.0};
    cfg.J[0][1] = cfg.J[1][0] = 20.0;
    Circuit c(2);
    c.add(Gate::rx(0, 0.7)).add(Gate::ry(1, -1.1)).add(Gate::cz(0, 1)).add(Gate::rz(0, 0.3)).add(Gate::s(1));
    DensityMatrix expected = pure(run(c, StateVector::zeros(2)));
    EXPECT_NEAR(fidelity(run_noisy_circuit(c, cfg, false), expected), 1.0, 1e-9);
}

TEST(Tomography, zero_noise_round_trip) {
    Rng rng(21);
    for (int trial = 0; trial < 12; trial++) {
        DensityMatrix rho = testing::random_density(4, rng);
        QubitList keep = testing::random_subset(4, rng);
        if (keep.empty()) {
            continue;
        }
        std::shuffle(keep.begin(), keep.end(), rng);
        DensityMatrix out = tomography_emulate(rho, keep, 0.0, 1);
        EXPECT_LT(max_abs_diff(out.entries(), partial_trace(rho, keep).entries()), 1e-9);
    }
    DensityMatrix triple = tomography_emulate(ideal_perfect(), {1, 3, 4}, 0.0, 0);
    EXPECT_LT(max_abs_diff(triple.entries(), Eigen::MatrixXcd::Identity(8, 8) / 8.0), 1e-9);
}

TEST(Tomography, noisy_bell_fidelity_and_seeding) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v[0] = v[3] = 1.0 / std::sqrt(2.0);
    DensityMatrix bell = pure(StateVector(2, v));
    DensityMatrix a = tomography_emulate(bell, {0, 1}, 0.01, 42);
    DensityMatrix b = tomography_emulate(bell, {0, 1}, 0.01, 42);
    DensityMatrix c = tomography_emulate(bell, {0, 1}, 0.01, 43);
    EXPECT_GE(fidelity(a, bell), 0.99);
    EXPECT_EQ(a.entries(), b.entries());
    EXPECT_GT(max_abs_diff(a.entries(), c.entries()), 0.0);
    EXPECT_THROW(tomography_emulate(bell, {0, 1}, -0.1, 0), ArgumentError);
}

TEST(Tomography, refuses_more_than_six_qubits) {
    DensityMatrix seven = DensityMatrix::maximally_mixed(7);
    EXPECT_THROW(tomography_emulate(seven, {0, 1, 2, 3, 4, 5, 6}, 0.0, 0), UnsupportedScaleError);
}

TEST(EntropyCurve, reference_states) {
    auto ideal = entropy_curve(ideal_perfect());
    auto mixed = entropy_curve(DensityMatrix::maximally_mixed(6));
    auto zeros = entropy_curve(pure(StateVector::zeros(6)));
    ASSERT_EQ(ideal.size(), 5u);
    const double expected[5] = {1, 2, 3, 2, 1};
    for (int k = 1; k <= 5; k++) {
        auto i = static_cast<std::size_t>(k - 1);
        EXPECT_EQ(ideal[i].k, k);
        EXPECT_NEAR(ideal[i].mean_bits, expected[i], 1e-9);
        EXPECT_NEAR(ideal[i].spread_bits, 0.0, 1e-9);
        EXPECT_EQ(ideal[i].ideal_bits, expected[i]);
        EXPECT_EQ(ideal[i].maxent_bits, k);
        EXPECT_NEAR(mixed[i].mean_bits, k, 1e-9);
        EXPECT_NEAR(zeros[i].mean_bits, 0.0, 1e-9);
    }
    EXPECT_THROW(entropy_curve(DensityMatrix::maximally_mixed(5)), ArgumentError);
}

TEST(Compensation, factor_one_is_identity_and_factor_below_one_rejected) {
    Rng rng(30);
    DensityMatrix rho = testing::random_density(3, rng);
    EXPECT_LT(max_abs_diff(rescale_compensation(rho, 1.0).entries(), rho.entries()), 1e-12);
    EXPECT_THROW(rescale_compensation(rho, 0.9), ArgumentError);
    DensityMatrix boosted = rescale_compensation(rho, 1.25);
    EXPECT_NEAR(boosted.entries().trace().real(), 1.0, 1e-12);
}

TEST(Compensation, exact_inverse_undoes_pure_dephasing) {
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    cfg.t2star = {0.3, 0.35, 0.4, 0.45, 0.5, 0.55};
    DensityMatrix start = ideal_perfect();
    DensityMatrix noisy = evolve_slice(start, cfg, PulseSlice::free_evolution(0.06), true);
    // Free evolution under H_int is diagonal, so undo its phases before the decay inverse.
    Eigen::VectorXcd phase = (internal_hamiltonian(cfg).diagonal() * Complex(0, 0.06)).array().exp();
    Eigen::MatrixXcd p = phase.asDiagonal();
    DensityMatrix dephased(6, p * noisy.entries() * p.adjoint());
    DensityMatrix recovered = rescale_exact_inverse(dephased, cfg.t2star, 0.06);
    EXPECT_LT(max_abs_diff(recovered.entries(), start.entries()), 1e-8);
}

TEST(Compensation, decohered_state_moves_back_toward_ideal) {
    NmrSystemConfig cfg = NmrSystemConfig::defaults();
    Circuit c = graph_state_circuit(perfect_graph());
    DensityMatrix noisy = run_noisy_circuit(c, cfg, true);
    PulseSequence seq = compile_circuit_to_sequence(c, cfg, cfg.gate_durations);
    std::vector<double> exposure = dephasing_exposure(seq, 6);
    ASSERT_EQ(exposure.size(), 6u);
    DensityMatrix fixed = rescale_exact_inverse(noisy, cfg.t2star, exposure);
    EXPECT_GT(fidelity(fixed, ideal_perfect()), fidelity(noisy, ideal_perfect()));

    auto before = entropy_curve(noisy);
    auto after = entropy_curve(fixed);
    EXPECT_GT(before[3].mean_bits, 2.0);
    EXPECT_GT(before[4].mean_bits, 1.0);
    EXPECT_LT(std::abs(after[3].mean_bits - 2.0), std::abs(before[3].mean_bits - 2.0));
    EXPECT_LT(std::abs(after[4].mean_bits - 1.0), std::abs(before[4].mean_bits - 1.0));

    // The constant-factor variant also helps, though not exactly.
    EXPECT_GT(fidelity(rescale_compensation(noisy, 1.1), ideal_perfect()), fidelity(noisy, ideal_perfect()));
}

}  // namespace
}  // namespace holoee
