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

#include <set>
#include <stdexcept>

#include "entplan/rng.hpp"
#include "gtest/gtest.h"
#include "test_oracles.hpp"

using namespace entplan;

namespace {

// 1-based labels of the worked example.
UserId L(UserId label) {
    return label - 1;
}

}  // namespace

TEST(topology, example_distances) {
    const GridNetwork net = GridNetwork::example();
    EXPECT_EQ(user_distance(net, L(2), L(5)), 6u);
    EXPECT_EQ(user_distance(net, L(5), L(6)), 0u);
    EXPECT_EQ(user_distance(net, L(1), L(4)), 0u);
    EXPECT_EQ(user_distance(net, L(2), L(5)), user_distance(net, L(5), L(2)));
}

TEST(topology, opposite_corners_span_seven) {
    GridNetwork net(5, 5, 200.0, {{0, 0}, {4, 4}}, 7);
    EXPECT_EQ(user_distance(net, 0, 1), 7u);
    EXPECT_EQ(net.max_grid_distance(), 7u);
}

TEST(topology, distance_rejects_same_user) {
    EXPECT_THROW(user_distance(GridNetwork::example(), 0, 0), std::invalid_argument);
    EXPECT_THROW(user_distance(GridNetwork::example(), 0, 6), std::out_of_range);
}

TEST(topology, constructor_validation) {
    EXPECT_THROW(GridNetwork(5, 5, 1, {{0, 0}, {0, 0}}, 1), std::invalid_argument);
    EXPECT_THROW(GridNetwork(5, 5, 1, {{0, 0}, {5, 0}}, 1), std::invalid_argument);
    EXPECT_THROW(GridNetwork(5, 5, 1, {{0, 0}}, 1), std::invalid_argument);
    EXPECT_THROW(GridNetwork(0, 5, 1, {{0, 0}, {1, 0}}, 1), std::invalid_argument);
}

TEST(topology, edge_allowed_thresholds) {
    const GridNetwork net = GridNetwork::example();
    EXPECT_FALSE(edge_allowed(net.with_threshold(5), L(2), L(5)));
    EXPECT_TRUE(edge_allowed(net.with_threshold(6), L(2), L(5)));
    const GridNetwork d4 = net.with_threshold(4);
    EXPECT_FALSE(edge_allowed(d4, L(2), L(3)));
    EXPECT_FALSE(edge_allowed(d4, L(2), L(5)));
    EXPECT_FALSE(edge_allowed(d4, L(2), L(6)));
    EXPECT_TRUE(edge_allowed(d4, L(2), L(1)));
}

TEST(topology, direct_pair_routes_directly) {
    Rng rng(0);
    auto path = constrained_path(GridNetwork::example(7), L(2), L(5), rng);
    ASSERT_TRUE(path.has_value());
    EXPECT_EQ(*path, (std::vector<UserId>{L(2), L(5)}));
}

TEST(topology, d4_pair_2_3_needs_one_relay) {
    const GridNetwork net = GridNetwork::example(4);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        auto path = constrained_path(net, L(2), L(3), rng);
        ASSERT_TRUE(path.has_value());
        ASSERT_EQ(path->size(), 3u);
        EXPECT_EQ(path->front(), L(2));
        EXPECT_EQ(path->back(), L(3));
        for (size_t k = 0; k + 1 < path->size(); ++k) {
            EXPECT_TRUE(edge_allowed(net, (*path)[k], (*path)[k + 1]));
        }
    }
}

TEST(topology, d_below_two_isolates_user_two) {
    for (unsigned d : {0u, 1u}) {
        const GridNetwork net = GridNetwork::example(d);
        for (UserId j = 0; j < 6; ++j) {
            if (j == L(2)) {
                continue;
            }
            Rng rng(0);
            EXPECT_FALSE(constrained_path(net, L(2), j, rng).has_value()) << "D=" << d;
        }
    }
}

TEST(topology, tie_breaks_cover_every_optimal_route) {
    // Users 2 and 3 at D=4 relay through 1 or 4 at equal cost.
    const GridNetwork net = GridNetwork::example(4);
    std::set<std::vector<UserId>> seen;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        seen.insert(*constrained_path(net, L(2), L(3), rng));
    }
    EXPECT_EQ(seen.size(), 2u);
}

TEST(topology, paths_are_minimal_against_exhaustive_search) {
    Rng gen(17);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<GridPoint> cells;
        for (int y = 0; y < 5; ++y) {
            for (int x = 0; x < 5; ++x) {
                cells.push_back({x, y});
            }
        }
        gen.shuffle(std::span<GridPoint>(cells));
        const size_t n = 2 + gen.uniform_index(7);
        cells.resize(n);
        const GridNetwork net(5, 5, 200.0, cells, static_cast<unsigned>(gen.uniform_index(5)));
        const UserId i = 0;
        const UserId j = static_cast<UserId>(1 + gen.uniform_index(n - 1));
        Rng rng(trial);
        const auto path = constrained_path(net, i, j, rng);
        const auto best = ref::brute_best_route(net, i, j);
        ASSERT_EQ(path.has_value(), best.has_value());
        if (!path) {
            continue;
        }
        uint64_t len = 0;
        std::set<UserId> distinct(path->begin(), path->end());
        ASSERT_EQ(distinct.size(), path->size());
        for (size_t k = 0; k + 1 < path->size(); ++k) {
            ASSERT_TRUE(edge_allowed(net, (*path)[k], (*path)[k + 1]));
            len += user_distance(net, (*path)[k], (*path)[k + 1]);
        }
        ASSERT_EQ(path->size() - 1, best->first);
        ASSERT_EQ(len, best->second);
    }
}

TEST(topology, distance_matches_brute_force) {
    const GridNetwork net = GridNetwork::example();
    for (UserId i = 0; i < 6; ++i) {
        for (UserId j = 0; j < 6; ++j) {
            if (i != j) {
                EXPECT_EQ(user_distance(net, i, j),
                          ref::brute_distance(net.position(i), net.position(j)));
            }
        }
    }
}
