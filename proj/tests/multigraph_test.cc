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

#include <stdexcept>

#include "entplan/rng.hpp"
#include "entplan/taskgen.hpp"
#include "gtest/gtest.h"
#include "test_oracles.hpp"

using namespace entplan;

namespace {

std::vector<ref::RawTask> raw(const TaskSet& ts) {
    std::vector<ref::RawTask> out;
    for (const auto& t : ts.tasks) {
        ref::RawTask r;
        for (const auto& [p, w] : t.edges()) {
            for (uint32_t i = 0; i < w; ++i) {
                r.emplace_back(p.lo, p.hi);
            }
        }
        out.push_back(r);
    }
    return out;
}

UserPair L(UserId a, UserId b) {
    return UserPair(a - 1, b - 1);
}

}  // namespace

TEST(user_pair, ordered_and_rejects_self_loop) {
    UserPair p(4, 1);
    EXPECT_EQ(p.lo, 1u);
    EXPECT_EQ(p.hi, 4u);
    EXPECT_TRUE(p.contains(4));
    EXPECT_EQ(p.other(1), 4u);
    EXPECT_THROW(UserPair(3, 3), std::invalid_argument);
}

TEST(user_graph, multiplicity_is_symmetric) {
    UserGraph g(4);
    g.add_edge(2, 0);
    g.add_edge(0, 2);
    EXPECT_EQ(g.multiplicity(0, 2), 2u);
    EXPECT_EQ(g.multiplicity(2, 0), 2u);
    EXPECT_EQ(g.total_multiplicity(), 2u);
    EXPECT_EQ(g.degree(0), 2u);
    EXPECT_FALSE(g.is_matching());
    EXPECT_EQ(g.remove_edge(UserPair(0, 2)), 2u);
    EXPECT_TRUE(g.empty());
}

TEST(user_graph, rejects_unknown_users_and_zero_counts) {
    UserGraph g(3);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
    EXPECT_THROW(g.add_edge(UserPair(0, 1), 0), std::invalid_argument);
}

TEST(adjacency_matrix, empty_graph_is_zero) {
    AdjMatrix a = adjacency_matrix(UserGraph(3));
    EXPECT_EQ(a.size(), 3u);
    EXPECT_TRUE(a.is_zero());
}

TEST(adjacency_matrix, example_task_four) {
    const TaskSet ts = example_task_set();
    AdjMatrix a = adjacency_matrix(ts.tasks[3]);
    size_t unit = 0;
    for (UserId i = 0; i < 6; ++i) {
        for (UserId j = 0; j < 6; ++j) {
            if (i != j && a.at(i, j) == 1) {
                ++unit;
            }
        }
    }
    EXPECT_EQ(unit, 6u);
    EXPECT_EQ(a.at(L(1, 4)), 1u);
    EXPECT_EQ(a.at(L(2, 3)), 1u);
    EXPECT_EQ(a.at(L(5, 6)), 1u);
    EXPECT_TRUE(a.is_symmetric());
}

TEST(adjacency_matrix, double_edge) {
    UserGraph g(2);
    g.add_edge(0, 1, 2);
    EXPECT_EQ(adjacency_matrix(g).at(0, 1), 2u);
}

TEST(adjacency_matrix, diagonal_writes_rejected) {
    AdjMatrix a(3);
    EXPECT_THROW(a.set(1, 1, 1), std::invalid_argument);
    EXPECT_NO_THROW(a.set(1, 1, 0));
}

TEST(union_adjacency, example_has_eight_pairs) {
    const TaskSet ts = example_task_set();
    AdjMatrix u = union_adjacency(6, ts.tasks);
    const std::vector<UserPair> want = {L(1, 2), L(3, 6), L(1, 5), L(2, 4),
                                        L(3, 5), L(1, 4), L(2, 3), L(5, 6)};
    EXPECT_EQ(u.support().size(), 8u);
    for (const auto& p : want) {
        EXPECT_EQ(u.at(p), 1u) << to_string(p);
    }
}

TEST(union_adjacency, singleton_and_disjoint) {
    UserGraph a(4, {UserPair(0, 1)});
    UserGraph b(4, {UserPair(2, 3)});
    EXPECT_EQ(union_adjacency(4, std::vector<UserGraph>{a}), adjacency_matrix(a));
    AdjMatrix u = union_adjacency(4, std::vector<UserGraph>{a, b});
    EXPECT_EQ(u.at(0, 1), 1u);
    EXPECT_EQ(u.at(2, 3), 1u);
}

TEST(union_adjacency, mismatched_dimensions) {
    std::vector<UserGraph> gs{UserGraph(3), UserGraph(4)};
    EXPECT_THROW(union_adjacency(3, gs), std::invalid_argument);
    EXPECT_THROW(simultaneous_adjacency(3, gs), std::invalid_argument);
}

TEST(simultaneous_adjacency, example_entries) {
    const TaskSet ts = example_task_set();
    AdjMatrix s = simultaneous_adjacency(6, ts.tasks);
    EXPECT_EQ(s.at(L(1, 5)), 1u);
    EXPECT_EQ(s.at(L(1, 4)), 3u);
    EXPECT_EQ(s.at(L(2, 3)), 3u);
    EXPECT_EQ(s.at(L(5, 6)), 3u);
    EXPECT_EQ(s.at(L(1, 2)), 2u);
    EXPECT_EQ(s.at(L(1, 3)), 0u);
}

TEST(simultaneous_adjacency, single_edge_task) {
    UserGraph a(3, {UserPair(0, 2)});
    EXPECT_EQ(simultaneous_adjacency(3, std::vector<UserGraph>{a}).at(0, 2), 1u);
}

TEST(restricted_simultaneous, full_window_matches_unrestricted) {
    const TaskSet ts = example_task_set();
    std::set<UserPair> all;
    for (UserId i = 0; i < 6; ++i) {
        for (UserId j = i + 1; j < 6; ++j) {
            all.emplace(i, j);
        }
    }
    EXPECT_EQ(restricted_simultaneous(6, ts.tasks, all), simultaneous_adjacency(6, ts.tasks));
}

TEST(restricted_simultaneous, sed_reduced_window) {
    // Example tasks after removing the satellite pairs (1,2), (1,5), (2,4), (2,3).
    std::vector<UserGraph> reduced{UserGraph(6, {L(3, 6)}), UserGraph(6),
                                   UserGraph(6, {L(3, 5)}), UserGraph(6, {L(1, 4), L(5, 6)})};
    AdjMatrix r = restricted_simultaneous(6, reduced, {L(3, 6), L(3, 5), L(5, 6)});
    EXPECT_EQ(r.at(L(5, 6)), 1u);
    EXPECT_EQ(r.at(L(1, 4)), 0u);
    EXPECT_EQ(simultaneous_adjacency(6, reduced).at(L(5, 6)), 2u);
}

TEST(restricted_simultaneous, empty_window_is_zero) {
    EXPECT_TRUE(restricted_simultaneous(6, example_task_set().tasks, {}).is_zero());
}

TEST(graph_from_matrix, round_trip) {
    UserGraph g(4);
    g.add_edge(0, 1, 3);
    g.add_edge(2, 3);
    EXPECT_EQ(graph_from_matrix(adjacency_matrix(g)), g);
}

TEST(matrices, agree_with_brute_force_on_random_multigraphs) {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const size_t n = 2 + rng.uniform_index(7);
        std::vector<UserGraph> graphs;
        for (size_t k = 0, m = 1 + rng.uniform_index(5); k < m; ++k) {
            UserGraph g(n);
            for (size_t e = 0, c = rng.uniform_index(6); e < c; ++e) {
                UserId a = static_cast<UserId>(rng.uniform_index(n));
                UserId b = static_cast<UserId>(rng.uniform_index(n));
                if (a != b) {
                    g.add_edge(a, b);
                }
            }
            graphs.push_back(g);
        }
        TaskSet wrapped{n, graphs};
        const auto raw_tasks = raw(wrapped);
        const AdjMatrix u = union_adjacency(n, graphs);
        const AdjMatrix s = simultaneous_adjacency(n, graphs);
        const auto bu = ref::brute_union(raw_tasks);
        const auto bs = ref::brute_simultaneous(raw_tasks);
        for (UserId i = 0; i < n; ++i) {
            ASSERT_EQ(u.at(i, i), 0u);
            ASSERT_EQ(s.at(i, i), 0u);
            for (UserId j = i + 1; j < n; ++j) {
                const auto key = ref::RawPair{i, j};
                const uint64_t want_u = bu.contains(key) ? bu.at(key) : 0;
                const uint64_t want_s = bs.contains(key) ? bs.at(key) : 0;
                ASSERT_EQ(u.at(i, j), want_u);
                ASSERT_EQ(u.at(j, i), want_u);
                ASSERT_EQ(s.at(i, j), want_s);
                // S dominates U and shares its support.
                ASSERT_GE(s.at(i, j), u.at(i, j));
                ASSERT_EQ(s.at(i, j) == 0, u.at(i, j) == 0);
            }
        }
        ASSERT_TRUE(u.is_symmetric());
        ASSERT_TRUE(s.is_symmetric());
        // Idempotent: the union of the union graph is itself.
        const UserGraph ug = graph_from_matrix(u);
        ASSERT_EQ(union_adjacency(n, std::vector<UserGraph>{ug}), u);
    }
}
