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

#ifndef HOLOEE_STABILIZER_H
#define HOLOEE_STABILIZER_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "holoee/circuits.h"
#include "holoee/qmath.h"

namespace holoee {

/// Hermitian Pauli operator +-P_0 ... P_{n-1}, bit-packed into 64-bit words.
/// (x, z) = (1, 1) denotes Y.
class PauliString {
   public:
    explicit PauliString(int n_qubits);
    /// Parses "+XZI", "-YY", or "XZ" (implicit +). '_' is accepted for I.
    static PauliString parse(std::string_view text);

    int n_qubits() const { return n_qubits_; }
    bool negative() const { return negative_; }
    void set_negative(bool negative) { negative_ = negative; }
    bool x(int q) const { return (xs_[word(q)] >> bit(q)) & 1u; }
    bool z(int q) const { return (zs_[word(q)] >> bit(q)) & 1u; }
    void set(int q, bool x_bit, bool z_bit);
    const std::vector<std::uint64_t> &x_words() const { return xs_; }
    const std::vector<std::uint64_t> &z_words() const { return zs_; }

    bool is_identity() const;
    bool commutes_with(const PauliString &other) const;
    /// this <- this * rhs. Both must commute so the product stays Hermitian.
    void multiply_by(const PauliString &rhs);

    std::string str() const;
    bool operator==(const PauliString &other) const = default;

   private:
    static std::size_t word(int q) { return static_cast<std::size_t>(q) / 64; }
    static int bit(int q) { return q % 64; }

    int n_qubits_;
    bool negative_ = false;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
};

/// Pure stabilizer state: n commuting, independent generators on n qubits.
class StabilizerTableau {
   public:
    /// Throws ValidationError when the generators do not commute or are dependent.
    explicit StabilizerTableau(std::vector<PauliString> generators);
    /// Builds without checking; callers guarantee the invariants.
    static StabilizerTableau unchecked(std::vector<PauliString> generators);

    static StabilizerTableau zero_state(int n_qubits);
    static StabilizerTableau from_strings(const std::vector<std::string> &rows);

    int n_qubits() const { return static_cast<int>(generators_.size()); }
    const std::vector<PauliString> &generators() const { return generators_; }

    /// Reduced row echelon form over columns (x0, z0, x1, z1, ...); unique per state.
    StabilizerTableau canonical() const;
    bool same_state(const StabilizerTableau &other) const;
    bool check_invariants() const;

    /// One generator per line, e.g. "+XZIIII".
    std::string dump() const;

    /// New qubit i is old qubit order[i].
    StabilizerTableau permuted(const std::vector<int> &order) const;

   private:
    StabilizerTableau() = default;
    std::vector<PauliString> generators_;
};

StabilizerTableau tensor_product(const StabilizerTableau &a, const StabilizerTableau &b);
StabilizerTableau bell_pair();

/// Generator i = X_i times Z on each neighbour of i.
StabilizerTableau from_graph(const Graph &graph);

/// Conjugates every generator by an H, CZ, S, X or Z gate.
StabilizerTableau apply_clifford(const StabilizerTableau &t, const Gate &gate);

/// +1 / -1 if +P / -P is in the stabilizer group, 0 otherwise.
int stabilizer_sign(const StabilizerTableau &t, const PauliString &p);

/// Entanglement entropy of `region` in bits: rank of the generators restricted to the region minus |region|.
int entanglement_entropy(const StabilizerTableau &t, const QubitList &region);

/// Projects qubits a, b onto (|00> + |11>)/sqrt(2) and removes them. Remaining qubits keep
/// their relative order. Throws ContractionError when the projection has zero probability.
StabilizerTableau postselect_bell(const StabilizerTableau &t, int a, int b);

/// Dense amplitudes (global phase fixed so the first non-zero amplitude is real positive).
StateVector to_state_vector(const StabilizerTableau &t);

}  // namespace holoee

#endif  // HOLOEE_STABILIZER_H
