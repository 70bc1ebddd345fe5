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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "entplan/multigraph.hpp"

namespace entplan {

using QubitId = uint32_t;

/// Simple undirected graph over qubits, each owned by a user. Represents a
/// graph state at qubit granularity; several qubits may share an owner.
class QubitGraph {
  public:
    QubitGraph() = default;

    /// Adds a fresh qubit and returns its id. Ids are never reused.
    QubitId add_qubit(UserId owner);
    /// Adds a qubit with a caller-chosen id (deserialization). Throws if taken.
    void add_qubit_with_id(QubitId id, UserId owner);
    /// Adds edge a-b. Throws on self-loops, unknown qubits, or an existing edge.
    void add_edge(QubitId a, QubitId b);
    void remove_edge(QubitId a, QubitId b);
    /// Adds the edge if absent, removes it if present.
    void toggle_edge(QubitId a, QubitId b);
    void remove_qubit(QubitId q);

    bool contains(QubitId q) const { return vertices_.contains(q); }
    bool has_edge(QubitId a, QubitId b) const;
    UserId owner(QubitId q) const;
    const std::set<QubitId>& neighbors(QubitId q) const;
    size_t degree(QubitId q) const { return neighbors(q).size(); }

    size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    size_t edge_count() const;
    /// All qubit ids in ascending order.
    std::vector<QubitId> qubits() const;
    /// Qubits owned by `user`, ascending.
    std::vector<QubitId> qubits_of(UserId user) const;
    /// Edges with a < b, in lexicographic order.
    std::vector<std::pair<QubitId, QubitId>> edges() const;
    /// Users owning at least one qubit.
    std::set<UserId> owners() const;
    /// Distinct user pairs joined by at least one edge, with the number of
    /// qubit edges between them.
    std::map<UserPair, uint32_t> user_edges() const;
    /// Qubits reachable from q.
    std::set<QubitId> component(QubitId q) const;

    QubitId next_id() const { return next_id_; }

    // In-place rewrites. The free functions below are the value-returning forms.
    void local_complement_in_place(QubitId v);
    void measure_z_in_place(QubitId v);
    void measure_y_in_place(QubitId v);
    void measure_x_in_place(QubitId v, std::optional<QubitId> helper);
    /// Replaces u and v by a single qubit that keeps u's id and owner.
    QubitId merge_in_place(QubitId u, QubitId v);

    /// Equal qubit sets, owners and edges. The id counter is not compared.
    bool operator==(const QubitGraph& other) const;

  private:
    struct Vertex {
        UserId owner = 0;
        std::set<QubitId> adj;
        bool operator==(const Vertex&) const = default;
    };

    const Vertex& vertex(QubitId q) const;
    Vertex& vertex(QubitId q);

    std::map<QubitId, Vertex> vertices_;
    QubitId next_id_ = 0;
};

/// Complements the subgraph induced on N(v). Throws std::out_of_range if v is absent.
QubitGraph local_complement(const QubitGraph& g, QubitId v);

/// Pauli-Z measurement: deletes v and its edges.
QubitGraph measure_z(const QubitGraph& g, QubitId v);

/// Pauli-Y measurement: local complement at v, then delete v.
QubitGraph measure_y(const QubitGraph& g, QubitId v);

/// Pauli-X measurement: local complement at helper, Y-measure v, local
/// complement at helper again. When v is isolated it is simply removed and
/// `helper` is ignored; otherwise helper must be a neighbor of v
/// (std::invalid_argument).
QubitGraph measure_x(const QubitGraph& g, QubitId v, std::optional<QubitId> helper);

struct MergeResult {
    QubitGraph graph;
    QubitId merged;
};

/// Merging measurement of u and v (outcome P_0). The merged qubit w keeps u's
/// id and owner and is adjacent to N(u) xor N(v), excluding u and v: an edge
/// to a common neighbor appears twice and cancels. u and v need not be
/// adjacent. Throws std::invalid_argument if u == v.
MergeResult merge(const QubitGraph& g, QubitId u, QubitId v);

enum class RewriteKind { kLocalComplement, kMeasureZ, kMeasureY, kMeasureX, kMerge };

/// One graph rewrite. `other` is the helper of an X measurement or the
/// partner of a merge.
struct Rewrite {
    RewriteKind kind = RewriteKind::kMeasureZ;
    QubitId target = 0;
    std::optional<QubitId> other;

    static Rewrite lc(QubitId v) { return {RewriteKind::kLocalComplement, v, std::nullopt}; }
    static Rewrite z(QubitId v) { return {RewriteKind::kMeasureZ, v, std::nullopt}; }
    static Rewrite y(QubitId v) { return {RewriteKind::kMeasureY, v, std::nullopt}; }
    static Rewrite x(QubitId v, std::optional<QubitId> helper) {
        return {RewriteKind::kMeasureX, v, helper};
    }
    static Rewrite merge(QubitId u, QubitId v) { return {RewriteKind::kMerge, u, v}; }

    bool operator==(const Rewrite&) const = default;
};

void apply_in_place(QubitGraph& g, const Rewrite& op);
QubitGraph apply(const QubitGraph& g, const Rewrite& op);

std::string to_string(RewriteKind kind);

}  // namespace entplan
