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

#ifndef HOLOEE_QMATH_H
#define HOLOEE_QMATH_H

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace holoee {

using Complex = std::complex<double>;
using QubitList = std::vector<int>;

// Qubit 0 is the most significant bit of a computational-basis index:
// for n qubits, qubit q is bit (n - 1 - q) of the index. Every module
// shares this convention.
inline int basis_bit(std::uint64_t index, int qubit, int n_qubits) {
    return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1u);
}

inline constexpr int kMaxStateQubits = 14;
inline constexpr int kMaxDensityQubits = 12;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
// Eigenvalues in [-kNegativeEigenTolerance, kEigenClip] count as zero.
inline constexpr double kNegativeEigenTolerance = 1e-8;
inline constexpr double kEigenClip = 1e-12;

/// Normalized pure state on n qubits (dense, 2^n amplitudes).
class StateVector {
   public:
    StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

    static StateVector zeros(int n_qubits);
    static StateVector basis(int n_qubits, std::uint64_t index);
    /// Rescales an unnormalized vector; throws ValidationError when the norm vanishes.
    static StateVector normalized(Eigen::VectorXcd raw);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }

   private:
    int n_qubits_;
    Eigen::VectorXcd amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite (up to kNegativeEigenTolerance) operator.
class DensityMatrix {
   public:
    DensityMatrix(int n_qubits, Eigen::MatrixXcd entries);

    static DensityMatrix from_state(const StateVector &state);
    static DensityMatrix maximally_mixed(int n_qubits);
    /// Nearest physical state by eigenvalue clipping and trace renormalization.
    /// Throws ValidationError if nothing positive survives the clip.
    static DensityMatrix project_physical(const Eigen::MatrixXcd &m);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd &entries() const { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

   private:
    int n_qubits_;
    Eigen::MatrixXcd entries_;
};

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

/// Weighted Pauli string, e.g. 0.5 * XIZ.
struct PauliObservable {
    std::vector<PauliLetter> letters;
    double coefficient = 1.0;

    static PauliObservable parse(std::string_view text, double coefficient = 1.0);
    /// The index-th string in base-4 order (I=0, X=1, Y=2, Z=3, qubit 0 most significant).
    static PauliObservable from_index(int n_qubits, std::uint64_t index);

    int n_qubits() const { return static_cast<int>(letters.size()); }
    std::string to_string() const;
    Eigen::MatrixXcd matrix() const;
    /// coefficient * tr(rho P).
    double expectation(const Eigen::MatrixXcd &rho) const;
    double expectation(const DensityMatrix &rho) const { return expectation(rho.entries()); }
    /// target += scale * coefficient * P, without forming P densely.
    void accumulate_into(Eigen::MatrixXcd &target, Complex scale) const;
};

/// Reduced density matrix on `keep`, with qubit order taken from `keep`.
DensityMatrix partial_trace(const DensityMatrix &rho, const QubitList &keep);
DensityMatrix partial_trace(const StateVector &state, const QubitList &keep);

/// Eigenvalues of a density matrix with the entropy clip applied (tiny values set to zero).
Eigen::VectorXd clipped_spectrum(const DensityMatrix &rho);

/// -sum lambda log2 lambda, in bits.
double von_neumann_entropy(const DensityMatrix &rho);
/// (1 / (1 - order)) log2(tr rho^order / (tr rho)^order), in bits.
double renyi_entropy(const DensityMatrix &rho, double order);
/// tr sqrt(sqrt(a) b sqrt(a)).
double fidelity(const DensityMatrix &a, const DensityMatrix &b);
double purity(const DensityMatrix &rho);

}  // namespace holoee

#endif  // HOLOEE_QMATH_H
