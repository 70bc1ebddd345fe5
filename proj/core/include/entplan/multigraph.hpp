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

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace entplan {

using UserId = uint32_t;

/// Unordered pair of distinct users, stored with lo < hi.
struct UserPair {
    UserId lo = 0;
    UserId hi = 0;

    UserPair() = default;
    /// Throws std::invalid_argument when a == b.
    UserPair(UserId a, UserId b);

    bool contains(UserId u) const { return lo == u || hi == u; }
    UserId other(UserId u) const { return u == lo ? hi : lo; }

    auto operator<=>(const UserPair&) const = default;
};

std::string to_string(const UserPair& p);

/// Undirected multigraph over users 0..n_users-1. No self-loops; every stored
/// multiplicity is positive.
class UserGraph {
  public:
    UserGraph() = default;
    explicit UserGraph(size_t n_users) : n_users_(n_users) {}
    UserGraph(size_t n_users, std::initializer_list<UserPair> edges);

    size_t n_users() const { return n_users_; }

    void add_edge(UserPair p, uint32_t count = 1);
    void add_edge(UserId a, UserId b, uint32_t count = 1) { add_edge(UserPair(a, b), count); }
    /// Removes every instance of the pair. Returns the removed multiplicity.
    uint32_t remove_edge(UserPair p);

    uint32_t multiplicity(UserPair p) const;
    uint32_t multiplicity(UserId a, UserId b) const;
    bool has_edge(UserPair p) const { return multiplicity(p) > 0; }

    const std::map<UserPair, uint32_t>& edges() const { return edges_; }
    bool empty() const { return edges_.empty(); }
    /// Number of distinct user pairs.
    size_t distinct_edges() const { return edges_.size(); }
    /// Sum of multiplicities.
    uint64_t total_multiplicity() const;
    /// Degree counting multiplicity.
    uint32_t degree(UserId u) const;
    /// True when every multiplicity is 1 and every user has degree at most 1.
    bool is_matching() const;

    bool operator==(const UserGraph&) const = default;

  private:
    void check_user(UserId u) const;

    size_t n_users_ = 0;
    std::map<UserPair, uint32_t> edges_;
};

/// Dense symmetric n x n matrix of non-negative counts with zero diagonal.
class AdjMatrix {
  public:
    AdjMatrix() = default;
    explicit AdjMatrix(size_t n) : n_(n), data_(n * n, 0) {}

    size_t size() const { return n_; }
    uint64_t at(UserId i, UserId j) const { return data_[index(i, j)]; }
    uint64_t at(UserPair p) const { return at(p.lo, p.hi); }
    /// Sets (i,j) and (j,i). Diagonal writes are rejected.
    void set(UserId i, UserId j, uint64_t value);
    void set(UserPair p, uint64_t value) { set(p.lo, p.hi, value); }

    /// Upper-triangle entries that are nonzero, in lexicographic order.
    std::vector<UserPair> support() const;
    /// Sum over i<j.
    uint64_t upper_sum() const;
    bool is_zero() const;
    bool is_symmetric() const;

    bool operator==(const AdjMatrix&) const = default;

  private:
    size_t index(UserId i, UserId j) const;

    size_t n_ = 0;
    std::vector<uint64_t> data_;
};

/// Entry (i,j) is the multiplicity w(i,j).
AdjMatrix adjacency_matrix(const UserGraph& g);

/// Entrywise maximum of the adjacency matrices. All graphs must have n_users
/// users (std::invalid_argument otherwise). An empty list yields the zero matrix.
AdjMatrix union_adjacency(size_t n_users, std::span<const UserGraph> graphs);

/// Entry (i,j) is the maximum over graphs k of A^k(i,j) times the total edge
/// multiplicity of graph k.
AdjMatrix simultaneous_adjacency(size_t n_users, std::span<const UserGraph> graphs);

/// Like simultaneous_adjacency, but each graph's edge total only counts edges
/// inside `window`, and entries outside `window` are zero.
AdjMatrix restricted_simultaneous(size_t n_users, std::span<const UserGraph> graphs,
                                  const std::set<UserPair>& window);

/// Multigraph whose multiplicities are the upper-triangle entries of `m`.
UserGraph graph_from_matrix(const AdjMatrix& m);

}  // namespace entplan
