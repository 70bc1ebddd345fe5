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

#include "entplan/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace entplan {

GridNetwork::GridNetwork(int width, int height, double edge_length_km,
                         std::vector<GridPoint> users, unsigned threshold)
    : width_(width),
      height_(height),
      edge_length_km_(edge_length_km),
      users_(std::move(users)),
      threshold_(threshold) {
    if (width_ <= 0 || height_ <= 0) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    if (users_.size() < 2) {
        throw std::invalid_argument("a network needs at least two users");
    }
    std::set<GridPoint> seen;
    for (size_t u = 0; u < users_.size(); ++u) {
        const auto& p = users_[u];
        if (p.x < 0 || p.y < 0 || p.x >= width_ || p.y >= height_) {
            throw std::invalid_argument("user " + std::to_string(u) + " at (" + std::to_string(p.x) +
                                        "," + std::to_string(p.y) + ") lies outside the grid");
        }
        if (!seen.insert(p).second) {
            throw std::invalid_argument("user " + std::to_string(u) + " shares a grid cell");
        }
    }
}

GridNetwork GridNetwork::example(unsigned threshold) {
    return GridNetwork(5, 5, 200.0,
                       {
                           {2, 2},  // 1
                           {0, 3},  // 2
                           {4, 1},  // 3
                           {2, 1},  // 4
                           {4, 0},  // 5
                           {3, 0},  // 6
                       },
                       threshold);
}

const GridPoint& GridNetwork::position(UserId u) const {
    if (u >= users_.size()) {
        throw std::out_of_range("unknown user " + std::to_string(u));
    }
    return users_[u];
}

GridNetwork GridNetwork::with_threshold(unsigned threshold) const {
    GridNetwork copy = *this;
    copy.threshold_ = threshold;
    return copy;
}

unsigned GridNetwork::max_grid_distance() const {
    return static_cast<unsigned>(std::max(0, width_ - 1 + height_ - 1 - 1));
}

unsigned user_distance(const GridNetwork& net, UserId i, UserId j) {
    if (i == j) {
        throw std::invalid_argument("distance needs two distinct users");
    }
    const auto& a = net.position(i);
    const auto& b = net.position(j);
    return static_cast<unsigned>(std::abs(a.x - b.x) + std::abs(a.y - b.y) - 1);
}

bool edge_allowed(const GridNetwork& net, UserId i, UserId j) {
    return user_distance(net, i, j) <= net.threshold();
}

std::optional<std::vector<UserId>> constrained_path(const GridNetwork& net, UserId i, UserId j,
                                                    Rng& rng) {
    if (i == j) {
        throw std::invalid_argument("path needs two distinct users");
    }
    const size_t n = net.n_users();
    net.position(i);
    net.position(j);
    if (edge_allowed(net, i, j)) {
        return std::vector<UserId>{i, j};
    }

    // Lexicographic (hops, summed distance) shortest paths; n is tiny so O(n^2)
    // Dijkstra is exact and cheap.
    using Cost = std::pair<uint64_t, uint64_t>;
    constexpr Cost kInf{std::numeric_limits<uint64_t>::max(), 0};
    std::vector<Cost> dist(n, kInf);
    std::vector<bool> done(n, false);
    dist[i] = {0, 0};
    for (size_t iter = 0; iter < n; ++iter) {
        size_t best = n;
        for (size_t v = 0; v < n; ++v) {
            if (!done[v] && dist[v] != kInf && (best == n || dist[v] < dist[best])) {
                best = v;
            }
        }
        if (best == n) {
            break;
        }
        done[best] = true;
        for (size_t v = 0; v < n; ++v) {
            if (done[v] || v == best) {
                continue;
            }
            const auto u = static_cast<UserId>(best);
            const auto w = static_cast<UserId>(v);
            if (!edge_allowed(net, u, w)) {
                continue;
            }
            Cost c{dist[best].first + 1, dist[best].second + user_distance(net, u, w)};
            if (c < dist[v]) {
                dist[v] = c;
            }
        }
    }
    if (dist[j] == kInf) {
        return std::nullopt;
    }

    // Count optimal paths from i, then sample one backwards with probability
    // proportional to the counts, which is uniform over all optimal paths.
    auto is_pred = [&](UserId u, UserId v) {
        if (u == v || dist[u] == kInf || !edge_allowed(net, u, v)) {
            return false;
        }
        return Cost{dist[u].first + 1, dist[u].second + user_distance(net, u, v)} == dist[v];
    };
    std::vector<UserId> order(n);
    for (size_t v = 0; v < n; ++v) {
        order[v] = static_cast<UserId>(v);
    }
    std::sort(order.begin(), order.end(), [&](UserId a, UserId b) { return dist[a] < dist[b]; });
    std::vector<uint64_t> count(n, 0);
    count[i] = 1;
    for (UserId v : order) {
        if (v == i || dist[v] == kInf) {
            continue;
        }
        for (UserId u = 0; u < n; ++u) {
            if (is_pred(u, v)) {
                count[v] += count[u];
            }
        }
    }

    std::vector<UserId> reversed{j};
    UserId cur = j;
    while (cur != i) {
        std::vector<UserId> preds;
        for (UserId u = 0; u < n; ++u) {
            if (is_pred(u, cur)) {
                preds.push_back(u);
            }
        }
        UserId next = preds.front();
        if (preds.size() > 1) {
            uint64_t pick = rng.uniform_index(count[cur]);
            for (UserId u : preds) {
                if (pick < count[u]) {
                    next = u;
                    break;
                }
                pick -= count[u];
            }
        }
        reversed.push_back(next);
        cur = next;
    }
    return std::vector<UserId>(reversed.rbegin(), reversed.rend());
}

}  // namespace entplan
