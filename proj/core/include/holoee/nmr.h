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

#ifndef HOLOEE_NMR_H
#define HOLOEE_NMR_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holoee/circuits.h"
#include "holoee/qmath.h"

namespace holoee {

struct NmrSystemConfig {
    int n_spins = 6;
    /// Resonance offsets nu_j in Hz.
    std::vector<double> nu;
    /// Symmetric J couplings in Hz, zero diagonal.
    std::vector<std::vector<double>> J;
    /// Per-spin T2* in seconds.
    std::vector<double> t2star;
    /// Slice duration in seconds.
    double dt = 1e-5;
    /// Implementation time per gate kind name ("H", "CZ", ...), seconds.
    std::map<std::string, double> gate_durations;
    /// Expected duration of the compiled perfect-tensor sequence; 0 disables the check.
    double total_budget_s = 0.06;

    /// Throws ConfigError on any invariant violation.
    void validate() const;

    /// Six spins, uniform T2* = 0.4 s, dt = 10 us, H = 7 ms and CZ = 2 ms (60 ms for the
    /// nine-edge perfect graph). Shifts and couplings are placeholders.
    static NmrSystemConfig defaults();
};

struct SpinControl {
    double amplitude_hz = 0.0;
    double phase_rad = 0.0;
};

/// Either a timed slice (free evolution or with per-spin controls) or a zero-duration
/// ideal-gate marker.
struct PulseSlice {
    double duration = 0.0;
    /// Empty means no control field.
    std::vector<SpinControl> controls;
    std::optional<Gate> ideal_gate;
    /// For markers: internal-Hamiltonian evolution undone before the gate, standing in for a
    /// shaped pulse that compensates the free evolution of its own implementation time.
    double refocus_duration = 0.0;

    static PulseSlice free_evolution(double duration) { return {duration, {}, std::nullopt, 0.0}; }
    static PulseSlice controlled(double duration, std::vector<SpinControl> controls) {
        return {duration, std::move(controls), std::nullopt, 0.0};
    }
    static PulseSlice marker(Gate gate, double refocus_duration = 0.0) {
        return {0.0, {}, std::move(gate), refocus_duration};
    }
    bool is_marker() const { return ideal_gate.has_value(); }
};

struct PulseSequence {
    std::vector<PulseSlice> slices;
    double total_duration() const;
};

/// sum_j pi nu_j Z_j + sum_{j<k} (pi/2) J_jk Z_j Z_k (rad/s), diagonal in the computational basis.
Eigen::MatrixXcd internal_hamiltonian(const NmrSystemConfig &cfg);

/// Per-element dephasing factor for one time step: exp(-dt sum_j [a_j != b_j] / T2*_j).
Eigen::MatrixXd dephasing_factors(const std::vector<double> &t2star, const std::vector<double> &durations);

/// Steps through the slice in dt increments: unitary exp(-i (H_int + H_control) dt), then
/// (if noise_on) per-element T2* decay keyed on the coherence order.
DensityMatrix evolve_slice(const DensityMatrix &rho, const NmrSystemConfig &cfg, const PulseSlice &slice,
                           bool noise_on);

/// Each gate becomes gate_durations[kind] of dt-slices of free evolution followed by an
/// ideal-gate marker that refocuses that interval.
PulseSequence compile_circuit_to_sequence(const Circuit &circuit, const NmrSystemConfig &cfg,
                                          const std::map<std::string, double> &gate_durations);

/// Starts from |0...0>, evolves the compiled sequence; the simulated experimental state.
DensityMatrix run_noisy_circuit(const Circuit &circuit, const NmrSystemConfig &cfg, bool noise_on);

/// Per-spin time between the last non-diagonal gate on that spin and the end of the sequence.
/// For circuits whose non-diagonal gates act on unentangled basis states (graph-state
/// preparation), the model's total decay is exactly exp(-sum_j [a_j != b_j] exposure_j / T2*_j).
std::vector<double> dephasing_exposure(const PulseSequence &sequence, int n_spins);

/// Pauli-basis tomography of the reduced state on `keep`, with seeded Gaussian noise of width
/// shot_sigma on every non-identity expectation, projected back to a physical state.
DensityMatrix tomography_emulate(const DensityMatrix &rho, const QubitList &keep, double shot_sigma,
                                 std::uint64_t seed);

struct EntropyPoint {
    int k;
    double mean_bits;
    double spread_bits;
    double ideal_bits;
    double maxent_bits;
};

/// S^(k) over the six cyclic windows {j, ..., j+k-1 mod 6} for k = 1..5; spread is the sample
/// standard deviation.
std::vector<EntropyPoint> entropy_curve(const DensityMatrix &rho6);

/// Multiplies every off-diagonal element by `factor` and projects to a physical state.
DensityMatrix rescale_compensation(const DensityMatrix &rho, double factor);

/// Undoes the dephasing model: element (a, b) times exp(sum_j [a_j != b_j] exposure_j / T2*_j).
DensityMatrix rescale_exact_inverse(const DensityMatrix &rho, const std::vector<double> &t2star,
                                    const std::vector<double> &exposure);
DensityMatrix rescale_exact_inverse(const DensityMatrix &rho, const std::vector<double> &t2star, double t);

}  // namespace holoee

#endif  // HOLOEE_NMR_H
