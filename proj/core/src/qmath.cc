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

#include "holoee/qmath.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "holoee/errors.h"

namespace holoee {

namespace {

std::uint64_t dim_of(int n_qubits) { return std::uint64_t{1} << n_qubits; }

void check_keep(const QubitList &keep, int n_qubits) {
    std::vector<bool> seen(static_cast<std::size_t>(n_qubits), false);
    for (int q : keep) {
        if (q < 0 || q >= n_qubits) {
            throw ArgumentError("partial_trace: qubit " + std::to_string(q) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
        }
        if (seen[static_cast<std::size_t>(q)]) {
            throw ArgumentError("partial_trace: duplicate qubit " + std::to_string(q));
        }
        seen[static_cast<std::size_t>(q)] = true;
    }
}

QubitList complement_of(const QubitList &keep, int n_qubits) {
    QubitList rest;
    for (int q = 0; q < n_qubits; q++) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            rest.push_back(q);
        }
    }
    return rest;
}

// Full index obtained by scattering the bits of `local` onto `qubits` (first qubit = MSB of local).
std::uint64_t scatter(std::uint64_t local, const QubitList &qubits, int n_qubits) {
    std::uint64_t full = 0;
    int k = static_cast<int>(qubits.size());
    for (int t = 0; t < k; t++) {
        if ((local >> (k - 1 - t)) & 1u) {
            full |= std::uint64_t{1} << (n_qubits - 1 - qubits[static_cast<std::size_t>(t)]);
        }
    }
    return full;
}

std::vector<std::uint64_t> scatter_table(const QubitList &qubits, int n_qubits) {
    std::vector<std::uint64_t> table(dim_of(static_cast<int>(qubits.size())));
    for (std::uint64_t i = 0; i < table.size(); i++) {
        table[i] = scatter(i, qubits, n_qubits);
    }
    return table;
}

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd &m) { return 0.5 * (m + m.adjoint()); }

// Principal square root of a PSD matrix; negative eigenvalues (numerical noise) clipped to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part(m));
    Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 0 || n_qubits > kMaxStateQubits) {
        throw UnsupportedScaleError("StateVector: " + std::to_string(n_qubits) + " qubits exceeds the dense cap of " +
                                    std::to_string(kMaxStateQubits));
    }
    if (static_cast<std::uint64_t>(amplitudes_.size()) != dim_of(n_qubits)) {
        throw ArgumentError("StateVector: expected 2^" + std::to_string(n_qubits) + " amplitudes, got " +
                            std::to_string(amplitudes_.size()));
    }
    double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg << "StateVector: norm " << norm << " is not 1";
        throw ValidationError(msg.str());
    }
}

StateVector StateVector::zeros(int n_qubits) { return basis(n_qubits, 0); }

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    if (n_qubits < 0 || n_qubits > kMaxStateQubits) {
        throw UnsupportedScaleError("StateVector: too many qubits");
    }
    if (index >= dim_of(n_qubits)) {
        throw ArgumentError("StateVector::basis: index out of range");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim_of(n_qubits)));
    amps[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::normalized(Eigen::VectorXcd raw) {
    auto size = static_cast<std::uint64_t>(raw.size());
    if (size == 0 || (size & (size - 1)) != 0) {
        throw ArgumentError("StateVector::normalized: length is not a power of two");
    }
    int n_qubits = std::countr_zero(size);
    double norm = raw.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw ValidationError("StateVector::normalized: zero norm");
    }
    raw /= norm;
    return StateVector(n_qubits, std::move(raw));
}

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd entries) : n_qubits_(n_qubits) {
    if (n_qubits < 0 || n_qubits > kMaxDensityQubits) {
        throw UnsupportedScaleError("DensityMatrix: " + std::to_string(n_qubits) +
                                    " qubits exceeds the dense cap of " + std::to_string(kMaxDensityQubits));
    }
    auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
    if (entries.rows() != d || entries.cols() != d) {
        throw ArgumentError("DensityMatrix: expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    }
    if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw ValidationError("DensityMatrix: not Hermitian");
    }
    Complex trace = entries.trace();
    if (std::abs(trace - Complex(1.0)) > kTraceTolerance) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace " << trace.real() << " is not 1";
        throw ValidationError(msg.str());
    }
    entries_ = hermitian_part(entries);
    double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(entries_, Eigen::EigenvaluesOnly)
                         .eigenvalues()
                         .minCoeff();
    if (min_eig < -kNegativeEigenTolerance) {
        std::ostringstream msg;
        msg << "DensityMatrix: eigenvalue " << min_eig << " is negative";
        throw ValidationError(msg.str());
    }
}

DensityMatrix DensityMatrix::from_state(const StateVector &state) {
    const auto &v = state.amplitudes();
    return DensityMatrix(state.n_qubits(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
    return DensityMatrix(n_qubits, Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::project_physical(const Eigen::MatrixXcd &m) {
    auto size = static_cast<std::uint64_t>(m.rows());
    if (m.rows() != m.cols() || size == 0 || (size & (size - 1)) != 0) {
        throw ArgumentError("project_physical: matrix is not 2^n x 2^n");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part(m));
    Eigen::VectorXd eig = solver.eigenvalues().cwiseMax(0.0);
    double total = eig.sum();
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw ValidationError("project_physical: no positive spectrum left to normalize");
    }
    eig /= total;
    Eigen::MatrixXcd out = solver.eigenvectors() * eig.asDiagonal() * solver.eigenvectors().adjoint();
    return DensityMatrix(std::countr_zero(size), hermitian_part(out));
}

PauliObservable PauliObservable::parse(std::string_view text, double coefficient) {
    PauliObservable p;
    p.coefficient = coefficient;
    for (char c : text) {
        switch (c) {
            case 'I':
            case '_':
                p.letters.push_back(PauliLetter::I);
                break;
            case 'X':
                p.letters.push_back(PauliLetter::X);
                break;
            case 'Y':
                p.letters.push_back(PauliLetter::Y);
                break;
            case 'Z':
                p.letters.push_back(PauliLetter::Z);
                break;
            default:
                throw ArgumentError(std::string("PauliObservable: unknown letter '") + c + "'");
        }
    }
    return p;
}

PauliObservable PauliObservable::from_index(int n_qubits, std::uint64_t index) {
    PauliObservable p;
    p.letters.resize(static_cast<std::size_t>(n_qubits));
    for (int q = n_qubits - 1; q >= 0; q--) {
        p.letters[static_cast<std::size_t>(q)] = static_cast<PauliLetter>(index & 3u);
        index >>= 2;
    }
    return p;
}

std::string PauliObservable::to_string() const {
    std::string out;
    for (PauliLetter l : letters) {
        out += "IXYZ"[static_cast<int>(l)];
    }
    return out;
}

namespace {

struct PauliMasks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    int y_count = 0;
};

PauliMasks masks_of(const PauliObservable &p) {
    PauliMasks m;
    int n = p.n_qubits();
    for (int q = 0; q < n; q++) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        switch (p.letters[static_cast<std::size_t>(q)]) {
            case PauliLetter::I:
                break;
            case PauliLetter::X:
                m.x |= bit;
                break;
            case PauliLetter::Y:
                m.x |= bit;
                m.z |= bit;
                m.y_count++;
                break;
            case PauliLetter::Z:
                m.z |= bit;
                break;
        }
    }
    return m;
}

const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// P|b> = phase(b) |b ^ x>, with Y = i X Z.
Complex pauli_phase(const PauliMasks &m, std::uint64_t b) {
    int exponent = m.y_count + 2 * (std::popcount(b & m.z) & 1);
    return kIPowers[exponent & 3];
}

}  // namespace

Eigen::MatrixXcd PauliObservable::matrix() const {
    auto d = static_cast<Eigen::Index>(dim_of(n_qubits()));
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    accumulate_into(out, 1.0);
    return out;
}

double PauliObservable::expectation(const Eigen::MatrixXcd &rho) const {
    if (rho.rows() != static_cast<Eigen::Index>(dim_of(n_qubits()))) {
        throw ArgumentError("PauliObservable::expectation: dimension mismatch");
    }
    PauliMasks m = masks_of(*this);
    Complex acc = 0.0;
    for (std::uint64_t b = 0; b < dim_of(n_qubits()); b++) {
        acc += pauli_phase(m, b) * rho(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ m.x));
    }
    return coefficient * acc.real();
}

void PauliObservable::accumulate_into(Eigen::MatrixXcd &target, Complex scale) const {
    if (target.rows() != static_cast<Eigen::Index>(dim_of(n_qubits()))) {
        throw ArgumentError("PauliObservable::accumulate_into: dimension mismatch");
    }
    PauliMasks m = masks_of(*this);
    for (std::uint64_t b = 0; b < dim_of(n_qubits()); b++) {
        target(static_cast<Eigen::Index>(b ^ m.x), static_cast<Eigen::Index>(b)) +=
            scale * coefficient * pauli_phase(m, b);
    }
}

DensityMatrix partial_trace(const DensityMatrix &rho, const QubitList &keep) {
    int n = rho.n_qubits();
    check_keep(keep, n);
    QubitList rest = complement_of(keep, n);
    auto keep_idx = scatter_table(keep, n);
    auto rest_idx = scatter_table(rest, n);
    const auto &m = rho.entries();
    auto d = static_cast<Eigen::Index>(keep_idx.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            Complex acc = 0.0;
            for (std::uint64_t e : rest_idx) {
                acc += m(static_cast<Eigen::Index>(keep_idx[static_cast<std::size_t>(r)] | e),
                         static_cast<Eigen::Index>(keep_idx[static_cast<std::size_t>(c)] | e));
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

DensityMatrix partial_trace(const StateVector &state, const QubitList &keep) {
    int n = state.n_qubits();
    check_keep(keep, n);
    QubitList rest = complement_of(keep, n);
    auto keep_idx = scatter_table(keep, n);
    auto rest_idx = scatter_table(rest, n);
    auto rows = static_cast<Eigen::Index>(keep_idx.size());
    auto cols = static_cast<Eigen::Index>(rest_idx.size());
    Eigen::MatrixXcd amp(rows, cols);
    for (Eigen::Index r = 0; r < rows; r++) {
        for (Eigen::Index e = 0; e < cols; e++) {
            amp(r, e) = state[keep_idx[static_cast<std::size_t>(r)] | rest_idx[static_cast<std::size_t>(e)]];
        }
    }
    return DensityMatrix(static_cast<int>(keep.size()), amp * amp.adjoint());
}

Eigen::VectorXd clipped_spectrum(const DensityMatrix &rho) {
    Eigen::VectorXd eig =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho.entries(), Eigen::EigenvaluesOnly).eigenvalues();
    for (Eigen::Index i = 0; i < eig.size(); i++) {
        if (eig[i] < -kNegativeEigenTolerance) {
            throw ValidationError("negative eigenvalue in density matrix spectrum");
        }
        if (eig[i] <= kEigenClip) {
            eig[i] = 0.0;
        }
    }
    return eig;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    double s = 0.0;
    for (double lambda : clipped_spectrum(rho)) {
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::max(s, 0.0);
}

double renyi_entropy(const DensityMatrix &rho, double order) {
    if (!(order > 0.0) || !std::isfinite(order)) {
        throw ArgumentError("renyi_entropy: order must be positive and finite");
    }
    if (order == 1.0) {
        throw ArgumentError("renyi_entropy: order 1 is the Von Neumann entropy");
    }
    double trace = rho.entries().trace().real();
    double moment = 0.0;
    if (std::floor(order) == order && order <= 64.0) {
        Eigen::MatrixXcd power = rho.entries();
        for (int i = 1; i < static_cast<int>(order); i++) {
            power = power * rho.entries();
        }
        moment = power.trace().real();
    } else {
        for (double lambda : clipped_spectrum(rho)) {
            if (lambda > 0.0) {
                moment += std::pow(lambda, order);
            }
        }
    }
    double s = std::log2(moment / std::pow(trace, order)) / (1.0 - order);
    return std::max(s, 0.0);
}

double fidelity(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw ArgumentError("fidelity: dimension mismatch (" + std::to_string(a.n_qubits()) + " vs " +
                            std::to_string(b.n_qubits()) + " qubits)");
    }
    // tr sqrt(sqrt(a) b sqrt(a)) equals the trace norm of sqrt(a) sqrt(b); the singular-value
    // route avoids square roots of near-zero eigenvalues of the sandwich.
    Eigen::MatrixXcd product = psd_sqrt(a.entries()) * psd_sqrt(b.entries());
    double f = Eigen::BDCSVD<Eigen::MatrixXcd>(product).singularValues().sum();
    return std::clamp(f, 0.0, 1.0);
}

double purity(const DensityMatrix &rho) { return rho.entries().squaredNorm(); }

}  // namespace holoee
