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

// Brute-force reference computations used to cross-check the library. They
// work from raw pair lists and explicit gate matrices and share no code with
// the implementation beyond the plain data types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "entplan/graphstate.hpp"
#include "entplan/topology.hpp"

namespace entplan::ref {

using RawPair = std::pair<UserId, UserId>;
using RawTask = std::vector<RawPair>;

inline RawPair ordered(UserId a, UserId b) {
    return a < b ? RawPair{a, b} : RawPair{b, a};
}

/// Max over tasks of how often each pair occurs in the task.
inline std::map<RawPair, uint64_t> brute_union(const std::vector<RawTask>& tasks) {
    std::map<RawPair, uint64_t> out;
    for (const auto& t : tasks) {
        std::map<RawPair, uint64_t> count;
        for (const auto& [a, b] : t) {
            ++count[ordered(a, b)];
        }
        for (const auto& [p, c] : count) {
            out[p] = std::max(out[p], c);
        }
    }
    return out;
}

/// Max over tasks of (occurrences of the pair) * (task size).
inline std::map<RawPair, uint64_t> brute_simultaneous(const std::vector<RawTask>& tasks) {
    std::map<RawPair, uint64_t> out;
    for (const auto& t : tasks) {
        std::map<RawPair, uint64_t> count;
        for (const auto& [a, b] : t) {
            ++count[ordered(a, b)];
        }
        for (const auto& [p, c] : count) {
            out[p] = std::max(out[p], c * t.size());
        }
    }
    return out;
}

inline unsigned brute_distance(const GridPoint& a, const GridPoint& b) {
    return static_cast<unsigned>(std::abs(a.x - b.x) + std::abs(a.y - b.y) - 1);
}

/// Fewest hops, then smallest summed distance, over every simple user path
/// from i to j whose hops all satisfy the threshold. Exhaustive DFS.
inline std::optional<std::pair<size_t, uint64_t>> brute_best_route(const GridNetwork& net, UserId i,
                                                                   UserId j) {
    const size_t n = net.n_users();
    std::optional<std::pair<size_t, uint64_t>> best;
    std::vector<bool> seen(n, false);
    std::function<void(UserId, size_t, uint64_t)> dfs = [&](UserId cur, size_t hops,
                                                             uint64_t len) {
        if (cur == j) {
            std::pair<size_t, uint64_t> c{hops, len};
            if (!best || c < *best) {
                best = c;
            }
            return;
        }
        for (UserId v = 0; v < n; ++v) {
            if (seen[v] || v == cur) {
                continue;
            }
            const unsigned d = brute_distance(net.position(cur), net.position(v));
            if (d > net.threshold()) {
                continue;
            }
            seen[v] = true;
            dfs(v, hops + 1, len + d);
            seen[v] = false;
        }
    };
    seen[i] = true;
    dfs(i, 0, 0);
    return best;
}

/// Graph state built gate by gate: |+>^n followed by an explicit 4x4 CZ
/// matrix on every edge. Bit k of an index is qubit k of g.qubits().
inline std::vector<std::complex<double>> gate_graph_state(const QubitGraph& g) {
    const auto qs = g.qubits();
    const size_t n = qs.size();
    std::vector<std::complex<double>> psi(size_t{1} << n, std::pow(2.0, -0.5 * n));
    auto pos = [&](QubitId q) {
        return static_cast<size_t>(std::find(qs.begin(), qs.end(), q) - qs.begin());
    };
    const double cz[4] = {1, 1, 1, -1};  // diagonal of CZ on |ab>
    for (const auto& [a, b] : g.edges()) {
        const size_t pa = pos(a);
        const size_t pb = pos(b);
        for (size_t idx = 0; idx < psi.size(); ++idx) {
            const size_t local = ((idx >> pa) & 1) * 2 + ((idx >> pb) & 1);
            psi[idx] *= cz[local];
        }
    }
    return psi;
}

/// Binomial(n, p) probability mass function.
inline double binomial_pmf(unsigned n, unsigned k, double p) {
    double c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
    }
    return c * std::pow(p, k) * std::pow(1 - p, n - k);
}

}  // namespace entplan::ref
