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

#include "holoee/stabilizer.h"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "holoee/errors.h"

namespace holoee {

PauliString::PauliString(int n_qubits)
    : n_qubits_(n_qubits),
      xs_((static_cast<std::size_t>(std::max(n_qubits, 0)) + 63) / 64, 0),
      zs_(xs_.size(), 0) {
    if (n_qubits < 0) {
        throw ArgumentError("PauliString: negative qubit count");
    }
}

PauliString PauliString::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    PauliString p(static_cast<int>(text.size()));
    p.negative_ = negative;
    for (int q = 0; q < p.n_qubits_; q++) {
        switch (text[static_cast<std::size_t>(q)]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.set(q, true, false);
                break;
            case 'Y':
                p.set(q, true, true);
                break;
            case 'Z':
                p.set(q, false, true);
                break;
            default:
                throw ArgumentError("PauliString: bad letter in '" + std::string(text) + "'");
        }
    }
    return p;
}

void PauliString::set(int q, bool x_bit, bool z_bit) {
    std::uint64_t m = std::uint64_t{1} << bit(q);
    xs_[word(q)] = x_bit ? (xs_[word(q)] | m) : (xs_[word(q)] & ~m);
    zs_[word(q)] = z_bit ? (zs_[word(q)] | m) : (zs_[word(q)] & ~m);
}

bool PauliString::is_identity() const {
    for (std::size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw ArgumentError("PauliString: size mismatch");
    }
    int parity = 0;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        parity ^= std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w])) & 1;
    }
    return parity == 0;
}

void PauliString::multiply_by(const PauliString &rhs) {
    if (rhs.n_qubits_ != n_qubits_) {
        throw ArgumentError("PauliString: size mismatch");
    }
    // Exponent of i picked up by the single-qubit products.
    int log_i = 2 * static_cast<int>(negative_) + 2 * static_cast<int>(rhs.negative_);
    for (std::size_t w = 0; w < xs_.size(); w++) {
        std::uint64_t active = (xs_[w] | zs_[w]) & (rhs.xs_[w] | rhs.zs_[w]);
        while (active) {
            int b = std::countr_zero(active);
            active &= active - 1;
            int x1 = (xs_[w] >> b) & 1, z1 = (zs_[w] >> b) & 1;
            int x2 = (rhs.xs_[w] >> b) & 1, z2 = (rhs.zs_[w] >> b) & 1;
            if (x1 && z1) {
                log_i += z2 - x2;
            } else if (x1) {
                log_i += z2 * (2 * x2 - 1);
            } else {
                log_i += x2 * (1 - 2 * z2);
            }
        }
        xs_[w] ^= rhs.xs_[w];
        zs_[w] ^= rhs.zs_[w];
    }
    log_i = ((log_i % 4) + 4) % 4;
    if (log_i & 1) {
        throw InternalError("PauliString::multiply_by: anticommuting factors");
    }
    negative_ = log_i == 2;
}

std::string PauliString::str() const {
    std::string out(1, negative_ ? '-' : '+');
    for (int q = 0; q < n_qubits_; q++) {
        out += "IZXY"[2 * x(q) + z(q)];
    }
    return out;
}

namespace {

struct Column {
    int qubit;
    bool z;
};

bool bit_at(const PauliString &p, Column c) { return c.z ? p.z(c.qubit) : p.x(c.qubit); }

std::vector<Column> all_columns(int n_qubits) {
    std::vector<Column> cols;
    for (int q = 0; q < n_qubits; q++) {
        cols.push_back({q, false});
        cols.push_back({q, true});
    }
    return cols;
}

// Reduced row echelon form over `cols` with sign-tracking row products. Pivot rows are moved
// to the front in column order; returns the number of pivots.
std::size_t row_reduce(std::vector<PauliString> &rows, const std::vector<Column> &cols) {
    std::size_t pivot = 0;
    for (Column c : cols) {
        if (pivot == rows.size()) {
            break;
        }
        std::size_t found = pivot;
        while (found < rows.size() && !bit_at(rows[found], c)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[found]);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r != pivot && bit_at(rows[r], c)) {
                rows[r].multiply_by(rows[pivot]);
            }
        }
        pivot++;
    }
    return pivot;
}

// GF(2) rank of the rows restricted to `qubits`, ignoring signs.
int restricted_rank(const std::vector<PauliString> &rows, const QubitList &qubits) {
    std::size_t width = 2 * qubits.size();
    std::size_t words = (width + 63) / 64;
    std::vector<std::vector<std::uint64_t>> packed;
    packed.reserve(rows.size());
    for (const PauliString &p : rows) {
        std::vector<std::uint64_t> bits(words, 0);
        for (std::size_t i = 0; i < qubits.size(); i++) {
            if (p.x(qubits[i])) {
                bits[(2 * i) / 64] |= std::uint64_t{1} << ((2 * i) % 64);
            }
            if (p.z(qubits[i])) {
                bits[(2 * i + 1) / 64] |= std::uint64_t{1} << ((2 * i + 1) % 64);
            }
        }
        packed.push_back(std::move(bits));
    }
    int rank = 0;
    for (std::size_t col = 0; col < width && rank < static_cast<int>(packed.size()); col++) {
        std::size_t w = col / 64;
        std::uint64_t m = std::uint64_t{1} << (col % 64);
        auto it = std::find_if(packed.begin() + rank, packed.end(), [&](const auto &row) { return row[w] & m; });
        if (it == packed.end()) {
            continue;
        }
        std::swap(packed[static_cast<std::size_t>(rank)], *it);
        const auto &pivot_row = packed[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < packed.size(); r++) {
            if (packed[r][w] & m) {
                for (std::size_t k = w; k < words; k++) {
                    packed[r][k] ^= pivot_row[k];
                }
            }
        }
        rank++;
    }
    return rank;
}

void check_region(const QubitList &region, int n_qubits) {
    std::vector<bool> seen(static_cast<std::size_t>(n_qubits), false);
    for (int q : region) {
        if (q < 0 || q >= n_qubits) {
            throw ArgumentError("region qubit " + std::to_string(q) + " out of range");
        }
        if (seen[static_cast<std::size_t>(q)]) {
            throw ArgumentError("duplicate region qubit " + std::to_string(q));
        }
        seen[static_cast<std::size_t>(q)] = true;
    }
}

}  // namespace

StabilizerTableau::StabilizerTableau(std::vector<PauliString> generators) : generators_(std::move(generators)) {
    if (!check_invariants()) {
        throw ValidationError("StabilizerTableau: generators must be n commuting, independent Paulis on n qubits");
    }
}

StabilizerTableau StabilizerTableau::unchecked(std::vector<PauliString> generators) {
    StabilizerTableau t;
    t.generators_ = std::move(generators);
    assert(t.check_invariants());
    return t;
}

StabilizerTableau StabilizerTableau::zero_state(int n_qubits) {
    std::vector<PauliString> rows;
    for (int q = 0; q < n_qubits; q++) {
        PauliString p(n_qubits);
        p.set(q, false, true);
        rows.push_back(std::move(p));
    }
    return unchecked(std::move(rows));
}

StabilizerTableau StabilizerTableau::from_strings(const std::vector<std::string> &rows) {
    std::vector<PauliString> gens;
    for (const auto &r : rows) {
        gens.push_back(PauliString::parse(r));
    }
    return StabilizerTableau(std::move(gens));
}

bool StabilizerTableau::check_invariants() const {
    int n = n_qubits();
    for (const auto &g : generators_) {
        if (g.n_qubits() != n) {
            return false;
        }
    }
    for (std::size_t i = 0; i < generators_.size(); i++) {
        for (std::size_t j = i + 1; j < generators_.size(); j++) {
            if (!generators_[i].commutes_with(generators_[j])) {
                return false;
            }
        }
    }
    QubitList everything(static_cast<std::size_t>(n));
    std::iota(everything.begin(), everything.end(), 0);
    return restricted_rank(generators_, everything) == n;
}

StabilizerTableau StabilizerTableau::canonical() const {
    std::vector<PauliString> rows = generators_;
    row_reduce(rows, all_columns(n_qubits()));
    return unchecked(std::move(rows));
}

bool StabilizerTableau::same_state(const StabilizerTableau &other) const {
    return n_qubits() == other.n_qubits() && canonical().generators_ == other.canonical().generators_;
}

std::string StabilizerTableau::dump() const {
    std::string out;
    for (const auto &g : generators_) {
        out += g.str();
        out += '\n';
    }
    return out;
}

StabilizerTableau StabilizerTableau::permuted(const std::vector<int> &order) const {
    int n = n_qubits();
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; i++) {
        if (static_cast<int>(sorted.size()) != n || sorted[static_cast<std::size_t>(i)] != i) {
            throw ArgumentError("StabilizerTableau::permuted: order is not a permutation");
        }
    }
    std::vector<PauliString> rows;
    for (const auto &g : generators_) {
        PauliString p(n);
        p.set_negative(g.negative());
        for (int i = 0; i < n; i++) {
            int src = order[static_cast<std::size_t>(i)];
            p.set(i, g.x(src), g.z(src));
        }
        rows.push_back(std::move(p));
    }
    return unchecked(std::move(rows));
}

StabilizerTableau tensor_product(const StabilizerTableau &a, const StabilizerTableau &b) {
    int na = a.n_qubits();
    int n = na + b.n_qubits();
    std::vector<PauliString> rows;
    for (const auto &g : a.generators()) {
        PauliString p(n);
        p.set_negative(g.negative());
        for (int q = 0; q < na; q++) {
            p.set(q, g.x(q), g.z(q));
        }
        rows.push_back(std::move(p));
    }
    for (const auto &g : b.generators()) {
        PauliString p(n);
        p.set_negative(g.negative());
        for (int q = 0; q < b.n_qubits(); q++) {
            p.set(na + q, g.x(q), g.z(q));
        }
        rows.push_back(std::move(p));
    }
    return StabilizerTableau::unchecked(std::move(rows));
}

StabilizerTableau bell_pair() { return StabilizerTableau::from_strings({"+XX", "+ZZ"}); }

StabilizerTableau from_graph(const Graph &graph) {
    int n = graph.n_vertices();
    std::vector<PauliString> rows;
    for (int v = 0; v < n; v++) {
        PauliString p(n);
        p.set(v, true, false);
        for (int u : graph.neighbors(v)) {
            p.set(u, false, true);
        }
        rows.push_back(std::move(p));
    }
    return StabilizerTableau::unchecked(std::move(rows));
}

StabilizerTableau apply_clifford(const StabilizerTableau &t, const Gate &gate) {
    if (!gate.is_clifford()) {
        throw ArgumentError("apply_clifford: " + gate_kind_name(gate.kind) + " is not a supported Clifford gate");
    }
    for (int q : gate.targets) {
        if (q >= t.n_qubits()) {
            throw ArgumentError("apply_clifford: target out of range");
        }
    }
    std::vector<PauliString> rows = t.generators();
    for (auto &p : rows) {
        int q = gate.targets[0];
        bool x = p.x(q), z = p.z(q);
        switch (gate.kind) {
            case GateKind::H:
                p.set_negative(p.negative() ^ (x && z));
                p.set(q, z, x);
                break;
            case GateKind::S:
                p.set_negative(p.negative() ^ (x && z));
                p.set(q, x, z ^ x);
                break;
            case GateKind::X:
                p.set_negative(p.negative() ^ z);
                break;
            case GateKind::Z:
                p.set_negative(p.negative() ^ x);
                break;
            case GateKind::CZ: {
                int r = gate.targets[1];
                bool xr = p.x(r), zr = p.z(r);
                p.set_negative(p.negative() ^ (x && xr && (z != zr)));
                p.set(q, x, z ^ xr);
                p.set(r, xr, zr ^ x);
                break;
            }
            default:
                throw InternalError("apply_clifford: unhandled gate");
        }
    }
    return StabilizerTableau::unchecked(std::move(rows));
}

int stabilizer_sign(const StabilizerTableau &t, const PauliString &p) {
    if (p.n_qubits() != t.n_qubits()) {
        throw ArgumentError("stabilizer_sign: size mismatch");
    }
    for (const auto &g : t.generators()) {
        if (!g.commutes_with(p)) {
            return 0;
        }
    }
    std::vector<PauliString> rows = t.generators();
    auto cols = all_columns(t.n_qubits());
    std::size_t pivots = row_reduce(rows, cols);
    PauliString residual = p;
    std::size_t r = 0;
    for (Column c : cols) {
        if (r == pivots) {
            break;
        }
        if (!bit_at(rows[r], c)) {
            continue;
        }
        if (bit_at(residual, c)) {
            residual.multiply_by(rows[r]);
        }
        r++;
    }
    if (!residual.is_identity()) {
        return 0;
    }
    return residual.negative() ? -1 : 1;
}

int entanglement_entropy(const StabilizerTableau &t, const QubitList &region) {
    check_region(region, t.n_qubits());
    return restricted_rank(t.generators(), region) - static_cast<int>(region.size());
}

namespace {

void postselect_plus_one(std::vector<PauliString> &rows, const PauliString &observable, int a, int b) {
    std::vector<std::size_t> anti;
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (!rows[i].commutes_with(observable)) {
            anti.push_back(i);
        }
    }
    if (anti.empty()) {
        int sign = stabilizer_sign(StabilizerTableau::unchecked(rows), observable);
        if (sign < 0) {
            throw ContractionError("Bell post-selection on qubits (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") has zero probability: " + observable.str() + " is fixed to -1");
        }
        if (sign == 0) {
            throw InternalError("postselect_bell: commuting observable outside the stabilizer group");
        }
        return;
    }
    std::size_t pivot = anti.front();
    for (std::size_t k = 1; k < anti.size(); k++) {
        rows[anti[k]].multiply_by(rows[pivot]);
    }
    rows[pivot] = observable;
}

}  // namespace

StabilizerTableau postselect_bell(const StabilizerTableau &t, int a, int b) {
    int n = t.n_qubits();
    if (a == b) {
        throw ArgumentError("postselect_bell: qubits must differ");
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
        throw ArgumentError("postselect_bell: qubit out of range");
    }
    std::vector<PauliString> rows = t.generators();
    PauliString xx(n), zz(n);
    xx.set(a, true, false);
    xx.set(b, true, false);
    zz.set(a, false, true);
    zz.set(b, false, true);
    postselect_plus_one(rows, xx, a, b);
    postselect_plus_one(rows, zz, a, b);

    std::size_t pivots = row_reduce(rows, {{a, false}, {a, true}, {b, false}, {b, true}});
    if (pivots != 2) {
        throw InternalError("postselect_bell: Bell pair did not factor out");
    }
    std::vector<PauliString> reduced;
    for (std::size_t r = pivots; r < rows.size(); r++) {
        PauliString p(n - 2);
        p.set_negative(rows[r].negative());
        int dst = 0;
        for (int q = 0; q < n; q++) {
            if (q == a || q == b) {
                continue;
            }
            p.set(dst++, rows[r].x(q), rows[r].z(q));
        }
        reduced.push_back(std::move(p));
    }
    return StabilizerTableau::unchecked(std::move(reduced)).canonical();
}

StateVector to_state_vector(const StabilizerTableau &t) {
    int n = t.n_qubits();
    if (n > kMaxStateQubits) {
        throw UnsupportedScaleError("to_state_vector: too many qubits for the dense backend");
    }
    std::uint64_t dim = std::uint64_t{1} << n;
    struct Masks {
        std::uint64_t x = 0, z = 0;
        int base_log_i = 0;
    };
    std::vector<Masks> masks;
    for (const auto &g : t.generators()) {
        Masks m;
        m.base_log_i = g.negative() ? 2 : 0;
        for (int q = 0; q < n; q++) {
            std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
            if (g.x(q)) {
                m.x |= bit;
            }
            if (g.z(q)) {
                m.z |= bit;
            }
            if (g.x(q) && g.z(q)) {
                m.base_log_i += 1;
            }
        }
        masks.push_back(m);
    }
    const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::uint64_t start = 0; start < dim; start++) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
        v[static_cast<Eigen::Index>(start)] = 1.0;
        for (const Masks &m : masks) {
            Eigen::VectorXcd gv = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
            for (std::uint64_t b = 0; b < dim; b++) {
                Complex amp = v[static_cast<Eigen::Index>(b)];
                if (amp == Complex(0.0)) {
                    continue;
                }
                int log_i = m.base_log_i + 2 * (std::popcount(b & m.z) & 1);
                gv[static_cast<Eigen::Index>(b ^ m.x)] += i_pow[log_i & 3] * amp;
            }
            v = 0.5 * (v + gv);
        }
        if (v.norm() < 1e-6) {
            continue;
        }
        for (Eigen::Index i = 0; i < v.size(); i++) {
            if (std::abs(v[i]) > 1e-9) {
                v *= std::conj(v[i]) / std::abs(v[i]);
                break;
            }
        }
        return StateVector::normalized(std::move(v));
    }
    throw InternalError("to_state_vector: stabilizer group has no +1 eigenvector");
}

}  // namespace holoee
