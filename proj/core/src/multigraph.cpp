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

#include "entplan/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace entplan {

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("multiplicity product overflows 64 bits");
    }
    return out;
}

uint64_t checked_add(uint64_t a, uint64_t b) {
    uint64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("multiplicity sum overflows 64 bits");
    }
    return out;
}

void check_dimensions(size_t n_users, std::span<const UserGraph> graphs) {
    for (const auto& g : graphs) {
        if (g.n_users() != n_users) {
            throw std::invalid_argument("graph has " + std::to_string(g.n_users()) +
                                        " users, expected " + std::to_string(n_users));
        }
    }
}

}  // namespace

UserPair::UserPair(UserId a, UserId b) {
    if (a == b) {
        throw std::invalid_argument("user pair needs two distinct users, got " + std::to_string(a) +
                                    " twice");
    }
    lo = std::min(a, b);
    hi = std::max(a, b);
}

std::string to_string(const UserPair& p) {
    return "(" + std::to_string(p.lo) + "," + std::to_string(p.hi) + ")";
}

UserGraph::UserGraph(size_t n_users, std::initializer_list<UserPair> edges) : n_users_(n_users) {
    for (const auto& e : edges) {
        add_edge(e);
    }
}

void UserGraph::check_user(UserId u) const {
    if (u >= n_users_) {
        throw std::out_of_range("user " + std::to_string(u) + " outside graph of " +
                                std::to_string(n_users_) + " users");
    }
}

void UserGraph::add_edge(UserPair p, uint32_t count) {
    check_user(p.hi);
    if (count == 0) {
        throw std::invalid_argument("edge multiplicity must be positive");
    }
    auto& slot = edges_[p];
    if (slot > std::numeric_limits<uint32_t>::max() - count) {
        throw std::overflow_error("edge multiplicity overflow");
    }
    slot += count;
}

uint32_t UserGraph::remove_edge(UserPair p) {
    auto it = edges_.find(p);
    if (it == edges_.end()) {
        return 0;
    }
    uint32_t m = it->second;
    edges_.erase(it);
    return m;
}

uint32_t UserGraph::multiplicity(UserPair p) const {
    auto it = edges_.find(p);
    return it == edges_.end() ? 0 : it->second;
}

uint32_t UserGraph::multiplicity(UserId a, UserId b) const {
    if (a == b) {
        return 0;
    }
    return multiplicity(UserPair(a, b));
}

uint64_t UserGraph::total_multiplicity() const {
    uint64_t total = 0;
    for (const auto& [p, m] : edges_) {
        total = checked_add(total, m);
    }
    return total;
}

uint32_t UserGraph::degree(UserId u) const {
    uint32_t d = 0;
    for (const auto& [p, m] : edges_) {
        if (p.contains(u)) {
            d += m;
        }
    }
    return d;
}

bool UserGraph::is_matching() const {
    std::vector<bool> seen(n_users_, false);
    for (const auto& [p, m] : edges_) {
        if (m != 1 || seen[p.lo] || seen[p.hi]) {
            return false;
        }
        seen[p.lo] = true;
        seen[p.hi] = true;
    }
    return true;
}

size_t AdjMatrix::index(UserId i, UserId j) const {
    if (i >= n_ || j >= n_) {
        throw std::out_of_range("matrix index outside " + std::to_string(n_) + "x" +
                                std::to_string(n_));
    }
    return static_cast<size_t>(i) * n_ + j;
}

void AdjMatrix::set(UserId i, UserId j, uint64_t value) {
    if (i == j) {
        if (value != 0) {
            throw std::invalid_argument("adjacency matrices have a zero diagonal");
        }
        return;
    }
    data_[index(i, j)] = value;
    data_[index(j, i)] = value;
}

std::vector<UserPair> AdjMatrix::support() const {
    std::vector<UserPair> out;
    for (UserId i = 0; i < n_; ++i) {
        for (UserId j = i + 1; j < n_; ++j) {
            if (at(i, j) != 0) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

uint64_t AdjMatrix::upper_sum() const {
    uint64_t total = 0;
    for (UserId i = 0; i < n_; ++i) {
        for (UserId j = i + 1; j < n_; ++j) {
            total = checked_add(total, at(i, j));
        }
    }
    return total;
}

bool AdjMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint64_t v) { return v == 0; });
}

bool AdjMatrix::is_symmetric() const {
    for (UserId i = 0; i < n_; ++i) {
        if (at(i, i) != 0) {
            return false;
        }
        for (UserId j = i + 1; j < n_; ++j) {
            if (at(i, j) != at(j, i)) {
                return false;
            }
        }
    }
    return true;
}

AdjMatrix adjacency_matrix(const UserGraph& g) {
    AdjMatrix m(g.n_users());
    for (const auto& [p, w] : g.edges()) {
        m.set(p, w);
    }
    return m;
}

AdjMatrix union_adjacency(size_t n_users, std::span<const UserGraph> graphs) {
    check_dimensions(n_users, graphs);
    AdjMatrix u(n_users);
    for (const auto& g : graphs) {
        for (const auto& [p, w] : g.edges()) {
            u.set(p, std::max<uint64_t>(u.at(p), w));
        }
    }
    return u;
}

AdjMatrix simultaneous_adjacency(size_t n_users, std::span<const UserGraph> graphs) {
    check_dimensions(n_users, graphs);
    AdjMatrix s(n_users);
    for (const auto& g : graphs) {
        const uint64_t total = g.total_multiplicity();
        for (const auto& [p, w] : g.edges()) {
            s.set(p, std::max(s.at(p), checked_mul(w, total)));
        }
    }
    return s;
}

AdjMatrix restricted_simultaneous(size_t n_users, std::span<const UserGraph> graphs,
                                  const std::set<UserPair>& window) {
    check_dimensions(n_users, graphs);
    AdjMatrix s(n_users);
    if (window.empty()) {
        return s;
    }
    for (const auto& g : graphs) {
        uint64_t total = 0;
        for (const auto& [p, w] : g.edges()) {
            if (window.contains(p)) {
                total = checked_add(total, w);
            }
        }
        if (total == 0) {
            continue;
        }
        for (const auto& [p, w] : g.edges()) {
            if (window.contains(p)) {
                s.set(p, std::max(s.at(p), checked_mul(w, total)));
            }
        }
    }
    return s;
}

UserGraph graph_from_matrix(const AdjMatrix& m) {
    UserGraph g(m.size());
    for (const auto& p : m.support()) {
        const uint64_t w = m.at(p);
        if (w > std::numeric_limits<uint32_t>::max()) {
            throw std::overflow_error("multiplicity does not fit an edge count");
        }
        g.add_edge(p, static_cast<uint32_t>(w));
    }
    return g;
}

}  // namespace entplan
