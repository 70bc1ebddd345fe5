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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "entplan/graphstate.hpp"
#include "entplan/rng.hpp"

namespace entplan::oracle {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major 2x2

inline constexpr size_t kMaxStateQubits = 10;

/// Dense pure state. Bit k of an amplitude index is the value of qubits[k].
struct StateVector {
    std::vector<QubitId> qubits;
    std::vector<Complex> amps;

    size_t n() const { return qubits.size(); }
    /// Position of qubit q in `qubits`; throws std::out_of_range if absent.
    size_t position(QubitId q) const;
    double norm() const;
};

enum class Pauli { kX, kY, kZ };

/// One stabilizer generator: a Pauli string in symplectic form plus a sign.
struct PauliRow {
    std::vector<bool> x;
    std::vector<bool> z;
    bool negative = false;
};

struct StabilizerTableau {
    std::vector<QubitId> qubits;
    std::vector<PauliRow> rows;

    /// Rows pairwise commute and are independent over GF(2).
    bool is_valid() const;
};

/// CZ along every edge applied to |+>^n. Qubits are ordered by id.
/// Throws std::length_error above kMaxStateQubits qubits.
StateVector graph_state_vector(const QubitGraph& g);

/// Generators X_v prod_{u in N(v)} Z_u, all signs +.
StabilizerTableau graph_state_tableau(const QubitGraph& g);

/// <psi| P |psi> for a tableau row over the same qubit order.
double expectation(const StateVector& sv, const PauliRow& row);

void apply_single_qubit(StateVector& sv, size_t position, const Mat2& m);

Mat2 hadamard();

/// Projects qubit q onto the +1 eigenspace of the Pauli, renormalizes, and
/// factors the qubit out. Throws std::domain_error on a zero-norm projection.
StateVector project_pauli(const StateVector& sv, Pauli basis, QubitId q);

/// Applies P_0 = |0><00| + |1><11| to (u, v) and renormalizes. The merged
/// qubit takes u's id and position. Throws std::domain_error on zero norm.
StateVector project_merge(const StateVector& sv, QubitId u, QubitId v);

/// |<a|b>|^2 for states over the same qubit order.
double fidelity(const StateVector& a, const StateVector& b);

/// The 24 single-qubit Cliffords modulo global phase; element 0 is identity.
const std::vector<Mat2>& clifford_catalog();

/// A product of catalog Cliffords, keyed by qubit; absent qubits get identity.
using Correction = std::map<QubitId, size_t>;

/// Searches for a local Clifford correction supported on `support` that maps
/// `simulated` onto `target` (fidelity >= 1 - 1e-8). Exact backtracking with
/// reduced-density-matrix pruning.
std::optional<Correction> find_correction(const StateVector& simulated, const StateVector& target,
                                          const std::vector<QubitId>& support);

/// Simulates `op` (outcome +, or P_0 for merges) on the graph state of `g`,
/// predicts the resulting graph with the graph rewrite, and reports whether a
/// local Clifford correction on the rewritten qubit's former neighborhood
/// makes them equal. Local complementation is checked as a pure local unitary.
/// Throws std::length_error for graphs above 8 qubits.
bool verify_rule(const QubitGraph& g, const Rewrite& op);

/// The four rewrite rules, in the order Z, Y, X, merge.
inline constexpr size_t kRuleCount = 4;

struct RuleTally {
    std::array<size_t, kRuleCount> cases{};
    std::array<size_t, kRuleCount> failures{};

    bool passed(size_t rule) const { return cases[rule] > 0 && failures[rule] == 0; }
    bool all_passed() const;
    RuleTally& operator+=(const RuleTally& other);
};

/// Every labeled simple graph on n vertices (qubits 0..n-1, one owner).
std::vector<QubitGraph> all_graphs(size_t n);

/// Runs verify_rule on g for every vertex (Z, Y and local complementation,
/// the latter counted under Y), every vertex/helper pair (X) and every
/// unordered vertex pair (merge).
RuleTally check_all_rules(const QubitGraph& g);

/// check_all_rules over all graphs with 1..max_vertices vertices.
RuleTally exhaustive_rule_sweep(size_t max_vertices);

/// Erdos-Renyi graph with edge probability 1/2 on n vertices.
QubitGraph random_graph(size_t n, Rng& rng);

}  // namespace entplan::oracle
