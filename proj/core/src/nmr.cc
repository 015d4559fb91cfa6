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
#include <random>

#include "holoee/errors.h"

namespace holoee {

namespace {

constexpr double kPi = std::numbers::pi;

int slice_steps(double duration, double dt) {
    double steps = duration / dt;
    double rounded = std::round(steps);
    if (duration < 0.0 || std::abs(steps - rounded) > 1e-6) {
        throw ValidationError("slice duration " + std::to_string(duration) + " s is not a multiple of dt");
    }
    return static_cast<int>(rounded);
}

Eigen::Index dim_of(int n) { return Eigen::Index{1} << n; }

// Diagonal of H_int.
Eigen::VectorXd internal_energies(const NmrSystemConfig &cfg) {
    int n = cfg.n_spins;
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim_of(n));
    for (Eigen::Index b = 0; b < e.size(); b++) {
        auto spin = [&](int j) { return basis_bit(static_cast<std::uint64_t>(b), j, n) ? -1.0 : 1.0; };
        double acc = 0.0;
        for (int j = 0; j < n; j++) {
            acc += kPi * cfg.nu[static_cast<std::size_t>(j)] * spin(j);
            for (int k = j + 1; k < n; k++) {
                acc += 0.5 * kPi * cfg.J[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * spin(j) * spin(k);
            }
        }
        e[b] = acc;
    }
    return e;
}

Eigen::MatrixXcd control_hamiltonian(const NmrSystemConfig &cfg, const std::vector<SpinControl> &controls) {
    int n = cfg.n_spins;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim_of(n), dim_of(n));
    for (int j = 0; j < n && j < static_cast<int>(controls.size()); j++) {
        const SpinControl &c = controls[static_cast<std::size_t>(j)];
        if (c.amplitude_hz == 0.0) {
            continue;
        }
        PauliObservable x, y;
        x.letters.assign(static_cast<std::size_t>(n), PauliLetter::I);
        y.letters = x.letters;
        x.letters[static_cast<std::size_t>(j)] = PauliLetter::X;
        y.letters[static_cast<std::size_t>(j)] = PauliLetter::Y;
        x.accumulate_into(h, kPi * c.amplitude_hz * std::cos(c.phase_rad));
        y.accumulate_into(h, kPi * c.amplitude_hz * std::sin(c.phase_rad));
    }
    return h;
}

// Precomputed per-configuration data for stepping slices.
struct Stepper {
    const NmrSystemConfig &cfg;
    bool noise_on;
    Eigen::VectorXd energies;
    Eigen::MatrixXd decay;
    // Elementwise factor of one free-evolution step (unitary phase times decay).
    Eigen::MatrixXcd free_step;

    Stepper(const NmrSystemConfig &config, bool noise) : cfg(config), noise_on(noise) {
        energies = internal_energies(cfg);
        Eigen::Index d = energies.size();
        decay = noise_on ? dephasing_factors(cfg.t2star, std::vector<double>(static_cast<std::size_t>(cfg.n_spins), cfg.dt))
                         : Eigen::MatrixXd::Ones(d, d);
        free_step.resize(d, d);
        for (Eigen::Index a = 0; a < d; a++) {
            for (Eigen::Index b = 0; b < d; b++) {
                free_step(a, b) = std::polar(decay(a, b), -(energies[a] - energies[b]) * cfg.dt);
            }
        }
    }

    void apply(Eigen::MatrixXcd &rho, const PulseSlice &slice) const {
        if (slice.is_marker()) {
            if (slice.refocus_duration != 0.0) {
                Eigen::VectorXcd phases(energies.size());
                for (Eigen::Index a = 0; a < energies.size(); a++) {
                    phases[a] = std::polar(1.0, energies[a] * slice.refocus_duration);
                }
                rho = phases.asDiagonal() * rho * phases.conjugate().asDiagonal();
            }
            apply_gate(rho, cfg.n_spins, *slice.ideal_gate);
            return;
        }
        int steps = slice_steps(slice.duration, cfg.dt);
        bool has_control = false;
        for (const auto &c : slice.controls) {
            has_control |= c.amplitude_hz != 0.0;
        }
        if (!has_control) {
            for (int s = 0; s < steps; s++) {
                rho = rho.cwiseProduct(free_step);
            }
            return;
        }
        Eigen::MatrixXcd h = control_hamiltonian(cfg, slice.controls);
        h.diagonal() += energies.cast<Complex>();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
        Eigen::VectorXcd phases(h.rows());
        for (Eigen::Index i = 0; i < h.rows(); i++) {
            phases[i] = std::polar(1.0, -solver.eigenvalues()[i] * cfg.dt);
        }
        Eigen::MatrixXcd u = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
        for (int s = 0; s < steps; s++) {
            rho = u * rho * u.adjoint();
            if (noise_on) {
                rho = rho.cwiseProduct(decay.cast<Complex>());
            }
        }
    }
};

void check_spins(int n_qubits, const NmrSystemConfig &cfg) {
    if (n_qubits != cfg.n_spins) {
        throw ArgumentError("state has " + std::to_string(n_qubits) + " qubits, configuration has " +
                            std::to_string(cfg.n_spins) + " spins");
    }
}

}  // namespace

void NmrSystemConfig::validate() const {
    if (n_spins < 1 || n_spins > kMaxDensityQubits) {
        throw ConfigError("n_spins must be in [1, " + std::to_string(kMaxDensityQubits) + "]");
    }
    auto n = static_cast<std::size_t>(n_spins);
    if (nu.size() != n) {
        throw ConfigError("nu must list one frequency per spin");
    }
    if (t2star.size() != n) {
        throw ConfigError("t2star must list one time per spin");
    }
    for (double t : t2star) {
        if (!(t > 0.0)) {
            throw ConfigError("t2star entries must be positive");
        }
    }
    if (J.size() != n) {
        throw ConfigError("J must be n_spins x n_spins");
    }
    for (std::size_t j = 0; j < n; j++) {
        if (J[j].size() != n) {
            throw ConfigError("J must be n_spins x n_spins");
        }
        if (J[j][j] != 0.0) {
            throw ConfigError("J must have a zero diagonal");
        }
        for (std::size_t k = 0; k < n; k++) {
            if (J[j][k] != J[k][j]) {
                throw ConfigError("J must be symmetric");
            }
        }
    }
    if (!(dt > 0.0)) {
        throw ConfigError("dt must be positive");
    }
    for (const auto &[name, duration] : gate_durations) {
        if (!(duration >= 0.0) || !std::isfinite(duration)) {
            throw ConfigError("gate duration for " + name + " must be a non-negative number");
        }
    }
    if (total_budget_s < 0.0) {
        throw ConfigError("total_budget_s must be non-negative");
    }
}

NmrSystemConfig NmrSystemConfig::defaults() {
    NmrSystemConfig cfg;
    cfg.n_spins = 6;
    // Placeholder offsets and couplings; the molecule's measured values are not used.
    cfg.nu = {1250.0, -830.0, 415.0, -2080.0, 1660.0, -310.0};
    cfg.J.assign(6, std::vector<double>(6, 0.0));
    const double ring[6] = {35.0, 38.0, 33.0, 36.0, 34.0, 37.0};
    for (int j = 0; j < 6; j++) {
        int k = (j + 1) % 6;
        cfg.J[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = ring[j];
        cfg.J[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = ring[j];
    }
    cfg.t2star.assign(6, 0.4);
    cfg.dt = 1e-5;
    cfg.gate_durations = {{"H", 0.007}, {"CZ", 0.002}, {"RX", 0.001}, {"RY", 0.001},
                          {"RZ", 0.0005}, {"S", 0.0005}, {"X", 0.001}, {"Z", 0.0005}};
    cfg.total_budget_s = 0.06;
    return cfg;
}

double PulseSequence::total_duration() const {
    double total = 0.0;
    for (const auto &s : slices) {
        total += s.duration;
    }
    return total;
}

Eigen::MatrixXcd internal_hamiltonian(const NmrSystemConfig &cfg) {
    cfg.validate();
    return internal_energies(cfg).cast<Complex>().asDiagonal();
}

Eigen::MatrixXd dephasing_factors(const std::vector<double> &t2star, const std::vector<double> &durations) {
    int n = static_cast<int>(t2star.size());
    if (durations.size() != t2star.size()) {
        throw ArgumentError("dephasing_factors: one duration per spin required");
    }
    Eigen::Index d = dim_of(n);
    Eigen::MatrixXd out(d, d);
    for (Eigen::Index a = 0; a < d; a++) {
        for (Eigen::Index b = 0; b < d; b++) {
            double rate = 0.0;
            auto diff = static_cast<std::uint64_t>(a ^ b);
            for (int j = 0; j < n; j++) {
                if (basis_bit(diff, j, n)) {
                    rate += durations[static_cast<std::size_t>(j)] / t2star[static_cast<std::size_t>(j)];
                }
            }
            out(a, b) = std::exp(-rate);
        }
    }
    return out;
}

DensityMatrix evolve_slice(const DensityMatrix &rho, const NmrSystemConfig &cfg, const PulseSlice &slice,
                           bool noise_on) {
    cfg.validate();
    check_spins(rho.n_qubits(), cfg);
    Stepper stepper(cfg, noise_on);
    Eigen::MatrixXcd m = rho.entries();
    stepper.apply(m, slice);
    return DensityMatrix(rho.n_qubits(), 0.5 * (m + m.adjoint()));
}

PulseSequence compile_circuit_to_sequence(const Circuit &circuit, const NmrSystemConfig &cfg,
                                          const std::map<std::string, double> &gate_durations) {
    cfg.validate();
    check_spins(circuit.n_qubits(), cfg);
    PulseSequence seq;
    for (const Gate &g : circuit.gates()) {
        auto it = gate_durations.find(gate_kind_name(g.kind));
        if (it == gate_durations.end()) {
            throw ConfigError("no duration configured for gate " + gate_kind_name(g.kind));
        }
        int steps = slice_steps(it->second, cfg.dt);
        for (int s = 0; s < steps; s++) {
            seq.slices.push_back(PulseSlice::free_evolution(cfg.dt));
        }
        seq.slices.push_back(PulseSlice::marker(g, steps * cfg.dt));
    }
    return seq;
}

DensityMatrix run_noisy_circuit(const Circuit &circuit, const NmrSystemConfig &cfg, bool noise_on) {
    PulseSequence seq = compile_circuit_to_sequence(circuit, cfg, cfg.gate_durations);
    Stepper stepper(cfg, noise_on);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_of(cfg.n_spins), dim_of(cfg.n_spins));
    rho(0, 0) = 1.0;
    for (const auto &slice : seq.slices) {
        stepper.apply(rho, slice);
    }
    return DensityMatrix(cfg.n_spins, 0.5 * (rho + rho.adjoint()));
}

std::vector<double> dephasing_exposure(const PulseSequence &sequence, int n_spins) {
    double total = sequence.total_duration();
    std::vector<double> last(static_cast<std::size_t>(n_spins), total);
    double now = 0.0;
    for (const auto &s : sequence.slices) {
        now += s.duration;
        if (s.is_marker() && !s.ideal_gate->is_diagonal()) {
            for (int q : s.ideal_gate->targets) {
                last.at(static_cast<std::size_t>(q)) = now;
            }
        }
        if (!s.is_marker()) {
            for (std::size_t q = 0; q < s.controls.size() && q < last.size(); q++) {
                if (s.controls[q].amplitude_hz != 0.0) {
                    last[q] = now;
                }
            }
        }
    }
    std::vector<double> exposure;
    for (double t : last) {
        exposure.push_back(total - t);
    }
    return exposure;
}

DensityMatrix tomography_emulate(const DensityMatrix &rho, const QubitList &keep, double shot_sigma,
                                 std::uint64_t seed) {
    if (keep.size() > 6) {
        throw UnsupportedScaleError("tomography_emulate: at most 6 qubits");
    }
    if (!(shot_sigma >= 0.0) || !std::isfinite(shot_sigma)) {
        throw ArgumentError("tomography_emulate: shot_sigma must be a non-negative number");
    }
    DensityMatrix reduced = partial_trace(rho, keep);
    int k = reduced.n_qubits();
    Eigen::Index d = dim_of(k);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(d, d);
    std::uint64_t n_paulis = std::uint64_t{1} << (2 * k);
    for (std::uint64_t i = 0; i < n_paulis; i++) {
        PauliObservable p = PauliObservable::from_index(k, i);
        double value = p.expectation(reduced);
        if (i != 0 && shot_sigma > 0.0) {
            value += shot_sigma * noise(rng);
        }
        p.accumulate_into(recon, value / static_cast<double>(d));
    }
    return DensityMatrix::project_physical(recon);
}

std::vector<EntropyPoint> entropy_curve(const DensityMatrix &rho6) {
    if (rho6.n_qubits() != 6) {
        throw ArgumentError("entropy_curve: expected a six-qubit state");
    }
    std::vector<EntropyPoint> out;
    for (int k = 1; k <= 5; k++) {
        std::vector<double> values;
        for (int j = 0; j < 6; j++) {
            QubitList window;
            for (int t = 0; t < k; t++) {
                window.push_back((j + t) % 6);
            }
            values.push_back(von_neumann_entropy(partial_trace(rho6, window)));
        }
        double mean = 0.0;
        for (double v : values) {
            mean += v;
        }
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) {
            var += (v - mean) * (v - mean);
        }
        var /= static_cast<double>(values.size() - 1);
        out.push_back({k, mean, std::sqrt(var), static_cast<double>(std::min(k, 6 - k)), static_cast<double>(k)});
    }
    return out;
}

namespace {

DensityMatrix project_compensated(const Eigen::MatrixXcd &m) {
    try {
        return DensityMatrix::project_physical(m);
    } catch (const ValidationError &e) {
        throw CompensationError(std::string("compensated matrix cannot be normalized: ") + e.what());
    }
}

}  // namespace

DensityMatrix rescale_compensation(const DensityMatrix &rho, double factor) {
    if (!(factor >= 1.0) || !std::isfinite(factor)) {
        throw ArgumentError("rescale_compensation: factor must be finite and >= 1");
    }
    Eigen::MatrixXcd m = rho.entries() * factor;
    m.diagonal() = rho.entries().diagonal();
    return project_compensated(m);
}

DensityMatrix rescale_exact_inverse(const DensityMatrix &rho, const std::vector<double> &t2star,
                                    const std::vector<double> &exposure) {
    if (static_cast<int>(t2star.size()) != rho.n_qubits() || exposure.size() != t2star.size()) {
        throw ArgumentError("rescale_exact_inverse: one T2* and one exposure per qubit required");
    }
    for (double t : t2star) {
        if (!(t > 0.0)) {
            throw ArgumentError("rescale_exact_inverse: T2* must be positive");
        }
    }
    Eigen::MatrixXd decay = dephasing_factors(t2star, exposure);
    Eigen::MatrixXcd m = rho.entries().cwiseQuotient(decay.cast<Complex>());
    return project_compensated(m);
}

DensityMatrix rescale_exact_inverse(const DensityMatrix &rho, const std::vector<double> &t2star, double t) {
    return rescale_exact_inverse(rho, t2star, std::vector<double>(t2star.size(), t));
}

}  // namespace holoee
