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

#include "entplan/graphstate.hpp"

#include <stdexcept>
#include <vector>

namespace entplan {

QubitId QubitGraph::add_qubit(UserId owner) {
    const QubitId id = next_id_++;
    vertices_.emplace(id, Vertex{owner, {}});
    return id;
}

void QubitGraph::add_qubit_with_id(QubitId id, UserId owner) {
    if (!vertices_.emplace(id, Vertex{owner, {}}).second) {
        throw std::invalid_argument("qubit id " + std::to_string(id) + " already in use");
    }
    if (id >= next_id_) {
        next_id_ = id + 1;
    }
}

const QubitGraph::Vertex& QubitGraph::vertex(QubitId q) const {
    auto it = vertices_.find(q);
    if (it == vertices_.end()) {
        throw std::out_of_range("unknown qubit " + std::to_string(q));
    }
    return it->second;
}

QubitGraph::Vertex& QubitGraph::vertex(QubitId q) {
    auto it = vertices_.find(q);
    if (it == vertices_.end()) {
        throw std::out_of_range("unknown qubit " + std::to_string(q));
    }
    return it->second;
}

void QubitGraph::add_edge(QubitId a, QubitId b) {
    if (a == b) {
        throw std::invalid_argument("self-loop on qubit " + std::to_string(a));
    }
    auto& va = vertex(a);
    auto& vb = vertex(b);
    if (!va.adj.insert(b).second) {
        throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) +
                                    " already present");
    }
    vb.adj.insert(a);
}

void QubitGraph::remove_edge(QubitId a, QubitId b) {
    vertex(a).adj.erase(b);
    vertex(b).adj.erase(a);
}

void QubitGraph::toggle_edge(QubitId a, QubitId b) {
    if (has_edge(a, b)) {
        remove_edge(a, b);
    } else {
        add_edge(a, b);
    }
}

void QubitGraph::remove_qubit(QubitId q) {
    auto& v = vertex(q);
    for (QubitId n : v.adj) {
        vertices_.at(n).adj.erase(q);
    }
    vertices_.erase(q);
}

bool QubitGraph::has_edge(QubitId a, QubitId b) const {
    return vertex(a).adj.contains(b);
}

UserId QubitGraph::owner(QubitId q) const {
    return vertex(q).owner;
}

const std::set<QubitId>& QubitGraph::neighbors(QubitId q) const {
    return vertex(q).adj;
}

size_t QubitGraph::edge_count() const {
    size_t twice = 0;
    for (const auto& [id, v] : vertices_) {
        twice += v.adj.size();
    }
    return twice / 2;
}

std::vector<QubitId> QubitGraph::qubits() const {
    std::vector<QubitId> out;
    out.reserve(vertices_.size());
    for (const auto& [id, v] : vertices_) {
        out.push_back(id);
    }
    return out;
}

std::vector<QubitId> QubitGraph::qubits_of(UserId user) const {
    std::vector<QubitId> out;
    for (const auto& [id, v] : vertices_) {
        if (v.owner == user) {
            out.push_back(id);
        }
    }
    return out;
}

std::vector<std::pair<QubitId, QubitId>> QubitGraph::edges() const {
    std::vector<std::pair<QubitId, QubitId>> out;
    for (const auto& [id, v] : vertices_) {
        for (auto it = v.adj.upper_bound(id); it != v.adj.end(); ++it) {
            out.emplace_back(id, *it);
        }
    }
    return out;
}

std::set<UserId> QubitGraph::owners() const {
    std::set<UserId> out;
    for (const auto& [id, v] : vertices_) {
        out.insert(v.owner);
    }
    return out;
}

std::map<UserPair, uint32_t> QubitGraph::user_edges() const {
    std::map<UserPair, uint32_t> out;
    for (const auto& [a, b] : edges()) {
        ++out[UserPair(owner(a), owner(b))];
    }
    return out;
}

std::set<QubitId> QubitGraph::component(QubitId q) const {
    std::set<QubitId> seen{q};
    std::vector<QubitId> stack{q};
    vertex(q);
    while (!stack.empty()) {
        QubitId cur = stack.back();
        stack.pop_back();
        for (QubitId n : vertices_.at(cur).adj) {
            if (seen.insert(n).second) {
                stack.push_back(n);
            }
        }
    }
    return seen;
}

void QubitGraph::local_complement_in_place(QubitId v) {
    const std::vector<QubitId> nbrs(vertex(v).adj.begin(), vertex(v).adj.end());
    for (size_t i = 0; i < nbrs.size(); ++i) {
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            toggle_edge(nbrs[i], nbrs[j]);
        }
    }
}

void QubitGraph::measure_z_in_place(QubitId v) {
    remove_qubit(v);
}

void QubitGraph::measure_y_in_place(QubitId v) {
    local_complement_in_place(v);
    remove_qubit(v);
}

void QubitGraph::measure_x_in_place(QubitId v, std::optional<QubitId> helper) {
    const auto& adj = vertex(v).adj;
    if (adj.empty()) {
        remove_qubit(v);
        return;
    }
    if (!helper.has_value() || !adj.contains(*helper)) {
        throw std::invalid_argument("X measurement of qubit " + std::to_string(v) +
                                    " needs a helper from its neighborhood");
    }
    const QubitId b = *helper;
    local_complement_in_place(b);
    measure_y_in_place(v);
    local_complement_in_place(b);
}

QubitId QubitGraph::merge_in_place(QubitId u, QubitId v) {
    if (u == v) {
        throw std::invalid_argument("merge needs two distinct qubits");
    }
    vertex(u);
    const std::set<QubitId> nv = vertex(v).adj;
    remove_qubit(v);
    for (QubitId n : nv) {
        if (n != u) {
            toggle_edge(u, n);
        }
    }
    return u;
}

bool QubitGraph::operator==(const QubitGraph& other) const {
    return vertices_ == other.vertices_;
}

QubitGraph local_complement(const QubitGraph& g, QubitId v) {
    QubitGraph out = g;
    out.local_complement_in_place(v);
    return out;
}

QubitGraph measure_z(const QubitGraph& g, QubitId v) {
    QubitGraph out = g;
    out.measure_z_in_place(v);
    return out;
}

QubitGraph measure_y(const QubitGraph& g, QubitId v) {
    QubitGraph out = g;
    out.measure_y_in_place(v);
    return out;
}

QubitGraph measure_x(const QubitGraph& g, QubitId v, std::optional<QubitId> helper) {
    QubitGraph out = g;
    out.measure_x_in_place(v, helper);
    return out;
}

MergeResult merge(const QubitGraph& g, QubitId u, QubitId v) {
    QubitGraph out = g;
    QubitId w = out.merge_in_place(u, v);
    return {std::move(out), w};
}

void apply_in_place(QubitGraph& g, const Rewrite& op) {
    switch (op.kind) {
        case RewriteKind::kLocalComplement:
            g.local_complement_in_place(op.target);
            return;
        case RewriteKind::kMeasureZ:
            g.measure_z_in_place(op.target);
            return;
        case RewriteKind::kMeasureY:
            g.measure_y_in_place(op.target);
            return;
        case RewriteKind::kMeasureX:
            g.measure_x_in_place(op.target, op.other);
            return;
        case RewriteKind::kMerge:
            if (!op.other.has_value()) {
                throw std::invalid_argument("merge rewrite without a partner qubit");
            }
            g.merge_in_place(op.target, *op.other);
            return;
    }
    throw std::invalid_argument("unknown rewrite kind");
}

QubitGraph apply(const QubitGraph& g, const Rewrite& op) {
    QubitGraph out = g;
    apply_in_place(out, op);
    return out;
}

std::string to_string(RewriteKind kind) {
    switch (kind) {
        case RewriteKind::kLocalComplement:
            return "LC";
        case RewriteKind::kMeasureZ:
            return "Z";
        case RewriteKind::kMeasureY:
            return "Y";
        case RewriteKind::kMeasureX:
            return "X";
        case RewriteKind::kMerge:
            return "M";
    }
    return "?";
}

}  // namespace entplan
