// Copyright 2026 The entplan Authors
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

#include "entplan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace entplan::oracle {

namespace {

constexpr double kNormFloor = 1e-12;
constexpr double kRhoTolerance = 1e-9;
constexpr double kFidelityTolerance = 1e-8;
constexpr size_t kMaxVerifyQubits = 8;

const Complex kI{0.0, 1.0};

// Inserts `bit` at position p of r, shifting higher bits up.
size_t insert_bit(size_t r, size_t p, size_t bit) {
    const size_t low = r & ((size_t{1} << p) - 1);
    const size_t high = r >> p;
    return low | (bit << p) | (high << (p + 1));
}

void normalize(StateVector& sv) {
    const double nrm = sv.norm();
    if (nrm < kNormFloor) {
        throw std::domain_error("projection has zero norm");
    }
    for (auto& a : sv.amps) {
        a /= nrm;
    }
}

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

// Removes the global phase so that the first non-negligible entry is real positive.
Mat2 canonical_phase(Mat2 m) {
    for (const auto& e : m) {
        if (std::abs(e) > 1e-9) {
            const Complex phase = e / std::abs(e);
            for (auto& x : m) {
                x /= phase;
            }
            break;
        }
    }
    return m;
}

bool same_matrix(const Mat2& a, const Mat2& b) {
    for (size_t i = 0; i < 4; ++i) {
        if (std::abs(a[i] - b[i]) > 1e-9) {
            return false;
        }
    }
    return true;
}

// Reduced density matrix on the given positions (row-major, dim x dim).
std::vector<Complex> reduced_density(const StateVector& sv, const std::vector<size_t>& keep) {
    const size_t n = sv.n();
    const size_t k = keep.size();
    const size_t dim_a = size_t{1} << k;
    std::vector<size_t> traced;
    for (size_t p = 0; p < n; ++p) {
        if (std::find(keep.begin(), keep.end(), p) == keep.end()) {
            traced.push_back(p);
        }
    }
    const size_t dim_b = size_t{1} << traced.size();
    // psi[a][b]
    std::vector<Complex> m(dim_a * dim_b);
    for (size_t idx = 0; idx < sv.amps.size(); ++idx) {
        size_t a = 0;
        for (size_t t = 0; t < k; ++t) {
            a |= ((idx >> keep[t]) & 1) << t;
        }
        size_t b = 0;
        for (size_t t = 0; t < traced.size(); ++t) {
            b |= ((idx >> traced[t]) & 1) << t;
        }
        m[a * dim_b + b] = sv.amps[idx];
    }
    std::vector<Complex> rho(dim_a * dim_a);
    for (size_t a = 0; a < dim_a; ++a) {
        for (size_t a2 = 0; a2 < dim_a; ++a2) {
            Complex acc = 0;
            for (size_t b = 0; b < dim_b; ++b) {
                acc += m[a * dim_b + b] * std::conj(m[a2 * dim_b + b]);
            }
            rho[a * dim_a + a2] = acc;
        }
    }
    return rho;
}

bool close(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > kRhoTolerance) {
            return false;
        }
    }
    return true;
}

}  // namespace

size_t StateVector::position(QubitId q) const {
    auto it = std::find(qubits.begin(), qubits.end(), q);
    if (it == qubits.end()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " not in state");
    }
    return static_cast<size_t>(it - qubits.begin());
}

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : amps) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

bool StabilizerTableau::is_valid() const {
    const size_t n = qubits.size();
    // Commutation: symplectic product must vanish.
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = i + 1; j < rows.size(); ++j) {
            bool parity = false;
            for (size_t q = 0; q < n; ++q) {
                parity ^= (rows[i].x[q] && rows[j].z[q]) != (rows[i].z[q] && rows[j].x[q]);
            }
            if (parity) {
                return false;
            }
        }
    }
    // Independence: Gaussian elimination over GF(2) on [x|z].
    std::vector<std::vector<bool>> m;
    for (const auto& r : rows) {
        std::vector<bool> bits(r.x);
        bits.insert(bits.end(), r.z.begin(), r.z.end());
        m.push_back(std::move(bits));
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && !m[pivot][col]) {
            ++pivot;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[rank], m[pivot]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r != rank && m[r][col]) {
                for (size_t c = 0; c < 2 * n; ++c) {
                    m[r][c] = m[r][c] != m[rank][c];
                }
            }
        }
        ++rank;
    }
    return rank == rows.size();
}

StateVector graph_state_vector(const QubitGraph& g) {
    if (g.size() > kMaxStateQubits) {
        throw std::length_error("graph_state_vector supports at most " +
                                std::to_string(kMaxStateQubits) + " qubits");
    }
    StateVector sv;
    sv.qubits = g.qubits();
    const size_t n = sv.qubits.size();
    std::vector<std::pair<size_t, size_t>> edges;
    for (const auto& [a, b] : g.edges()) {
        edges.emplace_back(sv.position(a), sv.position(b));
    }
    const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
    sv.amps.resize(size_t{1} << n);
    for (size_t idx = 0; idx < sv.amps.size(); ++idx) {
        int parity = 0;
        for (const auto& [pa, pb] : edges) {
            parity ^= static_cast<int>((idx >> pa) & (idx >> pb) & 1);
        }
        sv.amps[idx] = parity ? -amp : amp;
    }
    return sv;
}

StabilizerTableau graph_state_tableau(const QubitGraph& g) {
    StabilizerTableau t;
    t.qubits = g.qubits();
    const size_t n = t.qubits.size();
    for (size_t i = 0; i < n; ++i) {
        PauliRow row{std::vector<bool>(n, false), std::vector<bool>(n, false), false};
        row.x[i] = true;
        for (QubitId nb : g.neighbors(t.qubits[i])) {
            auto it = std::find(t.qubits.begin(), t.qubits.end(), nb);
            row.z[static_cast<size_t>(it - t.qubits.begin())] = true;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

double expectation(const StateVector& sv, const PauliRow& row) {
    const size_t n = sv.n();
    if (row.x.size() != n || row.z.size() != n) {
        throw std::invalid_argument("Pauli row width does not match the state");
    }
    size_t xmask = 0;
    for (size_t q = 0; q < n; ++q) {
        if (row.x[q]) {
            xmask |= size_t{1} << q;
        }
    }
    Complex acc = 0;
    for (size_t idx = 0; idx < sv.amps.size(); ++idx) {
        Complex phase = row.negative ? -1.0 : 1.0;
        for (size_t q = 0; q < n; ++q) {
            const bool bit = (idx >> q) & 1;
            if (row.z[q]) {
                if (bit) {
                    phase = -phase;
                }
                if (row.x[q]) {
                    phase *= kI;  // Y = iXZ
                }
            }
        }
        // (P psi)[idx ^ xmask] = phase * psi[idx]
        acc += std::conj(sv.amps[idx ^ xmask]) * phase * sv.amps[idx];
    }
    return acc.real();
}

void apply_single_qubit(StateVector& sv, size_t position, const Mat2& m) {
    const size_t bit = size_t{1} << position;
    for (size_t idx = 0; idx < sv.amps.size(); ++idx) {
        if (idx & bit) {
            continue;
        }
        const Complex a0 = sv.amps[idx];
        const Complex a1 = sv.amps[idx | bit];
        sv.amps[idx] = m[0] * a0 + m[1] * a1;
        sv.amps[idx | bit] = m[2] * a0 + m[3] * a1;
    }
}

Mat2 hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    return {r, r, r, -r};
}

StateVector project_pauli(const StateVector& sv, Pauli basis, QubitId q) {
    const size_t p = sv.position(q);
    StateVector out;
    out.qubits = sv.qubits;
    out.qubits.erase(out.qubits.begin() + static_cast<std::ptrdiff_t>(p));
    out.amps.resize(sv.amps.size() / 2);
    const double r = 1.0 / std::sqrt(2.0);
    for (size_t rest = 0; rest < out.amps.size(); ++rest) {
        const Complex a0 = sv.amps[insert_bit(rest, p, 0)];
        const Complex a1 = sv.amps[insert_bit(rest, p, 1)];
        switch (basis) {
            case Pauli::kZ:
                out.amps[rest] = a0;
                break;
            case Pauli::kX:
                out.amps[rest] = r * (a0 + a1);
                break;
            case Pauli::kY:
                out.amps[rest] = r * (a0 - kI * a1);
                break;
        }
    }
    normalize(out);
    return out;
}

StateVector project_merge(const StateVector& sv, QubitId u, QubitId v) {
    if (u == v) {
        throw std::invalid_argument("merge needs two distinct qubits");
    }
    const size_t pu = sv.position(u);
    const size_t pv = sv.position(v);
    StateVector out;
    out.qubits = sv.qubits;
    out.qubits.erase(out.qubits.begin() + static_cast<std::ptrdiff_t>(pv));
    const size_t pw = out.position(u);
    out.amps.resize(sv.amps.size() / 2);
    for (size_t rest = 0; rest < out.amps.size(); ++rest) {
        const size_t w = (rest >> pw) & 1;
        // Rebuild the old index: drop w's bit, reinsert at the old positions.
        size_t others = (rest & ((size_t{1} << pw) - 1)) | ((rest >> (pw + 1)) << pw);
        const size_t lo = std::min(pu, pv);
        const size_t hi = std::max(pu, pv);
        size_t old = insert_bit(insert_bit(others, lo, w), hi, w);
        out.amps[rest] = sv.amps[old];
    }
    normalize(out);
    return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.qubits != b.qubits) {
        throw std::invalid_argument("fidelity needs states over the same qubits");
    }
    Complex acc = 0;
    for (size_t i = 0; i < a.amps.size(); ++i) {
        acc += std::conj(a.amps[i]) * b.amps[i];
    }
    return std::norm(acc);
}

const std::vector<Mat2>& clifford_catalog() {
    static const std::vector<Mat2> catalog = [] {
        const Mat2 h = hadamard();
        const Mat2 s{1.0, 0.0, 0.0, kI};
        std::vector<Mat2> out{Mat2{1.0, 0.0, 0.0, 1.0}};
        for (size_t i = 0; i < out.size(); ++i) {
            for (const Mat2& gen : {h, s}) {
                Mat2 next = canonical_phase(mul(gen, out[i]));
                bool known = std::any_of(out.begin(), out.end(),
                                         [&](const Mat2& m) { return same_matrix(m, next); });
                if (!known) {
                    out.push_back(next);
                }
            }
        }
        if (out.size() != 24) {
            throw std::logic_error("single-qubit Clifford closure did not yield 24 elements");
        }
        return out;
    }();
    return catalog;
}

std::optional<Correction> find_correction(const StateVector& simulated, const StateVector& target,
                                          const std::vector<QubitId>& support) {
    if (simulated.qubits != target.qubits) {
        throw std::invalid_argument("correction search needs states over the same qubits");
    }
    std::vector<size_t> corrected;
    for (QubitId q : support) {
        corrected.push_back(simulated.position(q));
    }
    std::vector<size_t> fixed;
    for (size_t p = 0; p < simulated.n(); ++p) {
        if (std::find(corrected.begin(), corrected.end(), p) == corrected.end()) {
            fixed.push_back(p);
        }
    }
    if (!fixed.empty() && !close(reduced_density(simulated, fixed), reduced_density(target, fixed))) {
        return std::nullopt;
    }

    // Order the corrected qubits greedily so each prefix has the purest
    // target marginal: a purer marginal fixes more of the state and prunes
    // earlier. Record the target marginal of every prefix.
    std::vector<std::vector<size_t>> prefixes;
    std::vector<std::vector<Complex>> target_rho;
    std::vector<size_t> acc = fixed;
    std::vector<size_t> ordered;
    std::vector<size_t> remaining = corrected;
    while (!remaining.empty()) {
        size_t best = 0;
        double best_purity = -1;
        std::vector<Complex> best_rho;
        for (size_t i = 0; i < remaining.size(); ++i) {
            std::vector<size_t> trial = acc;
            trial.push_back(remaining[i]);
            std::vector<Complex> rho = reduced_density(target, trial);
            double purity = 0;
            for (const auto& e : rho) {
                purity += std::norm(e);
            }
            if (purity > best_purity + 1e-12) {
                best = i;
                best_purity = purity;
                best_rho = std::move(rho);
            }
        }
        acc.push_back(remaining[best]);
        ordered.push_back(remaining[best]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
        if (!remaining.empty()) {
            prefixes.push_back(acc);
            target_rho.push_back(std::move(best_rho));
        }
    }
    corrected = ordered;

    const auto& catalog = clifford_catalog();
    std::vector<size_t> choice(corrected.size(), 0);
    std::function<bool(size_t, const StateVector&)> search = [&](size_t level,
                                                                 const StateVector& state) {
        if (level == corrected.size()) {
            return fidelity(state, target) >= 1.0 - kFidelityTolerance;
        }
        for (size_t c = 0; c < catalog.size(); ++c) {
            StateVector next = state;
            apply_single_qubit(next, corrected[level], catalog[c]);
            // The last level is settled by the fidelity test alone.
            const bool last = level + 1 == corrected.size();
            if (!last && !close(reduced_density(next, prefixes[level]), target_rho[level])) {
                continue;
            }
            choice[level] = c;
            if (search(level + 1, next)) {
                return true;
            }
        }
        return false;
    };
    if (!search(0, simulated)) {
        return std::nullopt;
    }
    Correction out;
    for (size_t i = 0; i < corrected.size(); ++i) {
        if (choice[i] != 0) {
            out[simulated.qubits[corrected[i]]] = choice[i];
        }
    }
    return out;
}

bool verify_rule(const QubitGraph& g, const Rewrite& op) {
    if (g.size() > kMaxVerifyQubits) {
        throw std::length_error("verify_rule supports at most " + std::to_string(kMaxVerifyQubits) +
                                " qubits");
    }
    const StateVector before = graph_state_vector(g);
    const QubitGraph predicted = apply(g, op);

    StateVector simulated;
    std::set<QubitId> support;
    switch (op.kind) {
        case RewriteKind::kLocalComplement:
            simulated = before;
            support = g.neighbors(op.target);
            support.insert(op.target);
            break;
        case RewriteKind::kMeasureZ:
            simulated = project_pauli(before, Pauli::kZ, op.target);
            support = g.neighbors(op.target);
            break;
        case RewriteKind::kMeasureY:
            simulated = project_pauli(before, Pauli::kY, op.target);
            support = g.neighbors(op.target);
            break;
        case RewriteKind::kMeasureX:
            simulated = project_pauli(before, Pauli::kX, op.target);
            support = g.neighbors(op.target);
            if (op.other.has_value() && g.contains(*op.other)) {
                // The byproduct also touches the helper's own neighborhood.
                const auto& nh = g.neighbors(*op.other);
                support.insert(nh.begin(), nh.end());
                support.erase(op.target);
            }
            break;
        case RewriteKind::kMerge: {
            const QubitId u = op.target;
            const QubitId v = op.other.value();
            simulated = project_merge(before, u, v);
            support = g.neighbors(u);
            support.insert(g.neighbors(v).begin(), g.neighbors(v).end());
            support.erase(v);
            support.insert(u);
            break;
        }
    }
    const StateVector expected = graph_state_vector(predicted);
    return find_correction(simulated, expected, {support.begin(), support.end()}).has_value();
}

bool RuleTally::all_passed() const {
    for (size_t r = 0; r < kRuleCount; ++r) {
        if (!passed(r)) {
            return false;
        }
    }
    return true;
}

RuleTally& RuleTally::operator+=(const RuleTally& other) {
    for (size_t r = 0; r < kRuleCount; ++r) {
        cases[r] += other.cases[r];
        failures[r] += other.failures[r];
    }
    return *this;
}

std::vector<QubitGraph> all_graphs(size_t n) {
    std::vector<std::pair<QubitId, QubitId>> slots;
    for (QubitId a = 0; a < n; ++a) {
        for (QubitId b = a + 1; b < n; ++b) {
            slots.emplace_back(a, b);
        }
    }
    if (slots.size() >= 64) {
        throw std::length_error("too many graphs to enumerate");
    }
    std::vector<QubitGraph> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); ++mask) {
        QubitGraph g;
        for (size_t i = 0; i < n; ++i) {
            g.add_qubit(0);
        }
        for (size_t e = 0; e < slots.size(); ++e) {
            if ((mask >> e) & 1) {
                g.add_edge(slots[e].first, slots[e].second);
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

RuleTally check_all_rules(const QubitGraph& g) {
    RuleTally t;
    auto record = [&](size_t rule, const Rewrite& op) {
        ++t.cases[rule];
        if (!verify_rule(g, op)) {
            ++t.failures[rule];
        }
    };
    const auto qs = g.qubits();
    for (QubitId v : qs) {
        record(0, Rewrite::z(v));
        record(1, Rewrite::y(v));
        record(1, Rewrite::lc(v));
        if (g.degree(v) == 0) {
            record(2, Rewrite::x(v, std::nullopt));
        }
        for (QubitId h : g.neighbors(v)) {
            record(2, Rewrite::x(v, h));
        }
    }
    for (size_t a = 0; a < qs.size(); ++a) {
        for (size_t b = a + 1; b < qs.size(); ++b) {
            record(3, Rewrite::merge(qs[a], qs[b]));
        }
    }
    return t;
}

RuleTally exhaustive_rule_sweep(size_t max_vertices) {
    RuleTally total;
    for (size_t n = 1; n <= max_vertices; ++n) {
        for (const auto& g : all_graphs(n)) {
            total += check_all_rules(g);
        }
    }
    return total;
}

QubitGraph random_graph(size_t n, Rng& rng) {
    QubitGraph g;
    for (size_t i = 0; i < n; ++i) {
        g.add_qubit(0);
    }
    for (QubitId a = 0; a < n; ++a) {
        for (QubitId b = a + 1; b < n; ++b) {
            if (rng.bernoulli(0.5)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

}  // namespace entplan::oracle
