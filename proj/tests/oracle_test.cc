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

#include <cmath>
#include <stdexcept>

#include "entplan/rng.hpp"
#include "gtest/gtest.h"
#include "test_oracles.hpp"

using namespace entplan;
using namespace entplan::oracle;

namespace {

QubitGraph make(size_t n, std::initializer_list<std::pair<QubitId, QubitId>> edges) {
    QubitGraph g;
    for (size_t i = 0; i < n; ++i) {
        g.add_qubit(static_cast<UserId>(i));
    }
    for (const auto& [a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

constexpr double kTight = 1e-10;

}  // namespace

TEST(oracle, edge_state_amplitudes) {
    const StateVector sv = graph_state_vector(make(2, {{0, 1}}));
    const double h = 0.5;
    EXPECT_NEAR(std::abs(sv.amps[0] - Complex(h)), 0, kTight);
    EXPECT_NEAR(std::abs(sv.amps[1] - Complex(h)), 0, kTight);
    EXPECT_NEAR(std::abs(sv.amps[2] - Complex(h)), 0, kTight);
    EXPECT_NEAR(std::abs(sv.amps[3] - Complex(-h)), 0, kTight);
}

TEST(oracle, hadamard_on_either_qubit_gives_epr_pair) {
    const double r = 1 / std::sqrt(2.0);
    for (size_t pos : {0u, 1u}) {
        StateVector sv = graph_state_vector(make(2, {{0, 1}}));
        apply_single_qubit(sv, pos, hadamard());
        EXPECT_NEAR(std::abs(sv.amps[0] - Complex(r)), 0, kTight);
        EXPECT_NEAR(std::abs(sv.amps[1]), 0, kTight);
        EXPECT_NEAR(std::abs(sv.amps[2]), 0, kTight);
        EXPECT_NEAR(std::abs(sv.amps[3] - Complex(r)), 0, kTight);
    }
}

TEST(oracle, state_vector_matches_gate_by_gate_construction) {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const QubitGraph g = random_graph(1 + rng.uniform_index(7), rng);
        const StateVector sv = graph_state_vector(g);
        const auto ref = ref::gate_graph_state(g);
        ASSERT_EQ(sv.amps.size(), ref.size());
        for (size_t i = 0; i < ref.size(); ++i) {
            ASSERT_NEAR(std::abs(sv.amps[i] - ref[i]), 0, kTight);
        }
    }
}

TEST(oracle, tableau_generators_stabilize_state) {
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const QubitGraph g = random_graph(1 + rng.uniform_index(7), rng);
        const StabilizerTableau t = graph_state_tableau(g);
        ASSERT_TRUE(t.is_valid());
        ASSERT_EQ(t.rows.size(), g.size());
        const StateVector sv = graph_state_vector(g);
        for (const auto& row : t.rows) {
            ASSERT_NEAR(expectation(sv, row), 1.0, kTight);
        }
    }
}

TEST(oracle, edge_tableau_is_xz_zx) {
    const StabilizerTableau t = graph_state_tableau(make(2, {{0, 1}}));
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0].x, (std::vector<bool>{true, false}));
    EXPECT_EQ(t.rows[0].z, (std::vector<bool>{false, true}));
    EXPECT_EQ(t.rows[1].x, (std::vector<bool>{false, true}));
    EXPECT_EQ(t.rows[1].z, (std::vector<bool>{true, false}));
}

TEST(oracle, tableau_validity_rejects_anticommuting_rows) {
    StabilizerTableau t;
    t.qubits = {0};
    t.rows = {PauliRow{{true}, {false}, false}, PauliRow{{false}, {true}, false}};
    EXPECT_FALSE(t.is_valid());
}

TEST(oracle, clifford_catalog_has_24_distinct_elements) {
    EXPECT_EQ(clifford_catalog().size(), 24u);
}

TEST(oracle, z_projection_leaves_plus_state) {
    const StateVector out = project_pauli(graph_state_vector(make(2, {{0, 1}})), Pauli::kZ, 1);
    ASSERT_EQ(out.n(), 1u);
    EXPECT_NEAR(fidelity(out, graph_state_vector(make(1, {}))), 1.0, kTight);
}

TEST(oracle, x_projection_of_path_middle_matches_rewrite) {
    const QubitGraph g = make(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(verify_rule(g, Rewrite::x(1, 0)));
    EXPECT_TRUE(verify_rule(g, Rewrite::x(1, 2)));
}

TEST(oracle, path_merge_and_repeater_merge) {
    EXPECT_TRUE(verify_rule(make(4, {{0, 1}, {1, 2}, {2, 3}}), Rewrite::merge(1, 2)));
    EXPECT_TRUE(verify_rule(make(4, {{0, 1}, {2, 3}}), Rewrite::merge(1, 2)));
}

TEST(oracle, correction_search_negative_control) {
    const StateVector edge = graph_state_vector(make(2, {{0, 1}}));
    const StateVector empty = graph_state_vector(make(2, {}));
    EXPECT_FALSE(find_correction(edge, empty, {0, 1}).has_value());
    // Star and triangle are LC-equivalent only with the centre in the support.
    const StateVector star = graph_state_vector(make(3, {{0, 1}, {0, 2}}));
    const StateVector tri = graph_state_vector(make(3, {{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_TRUE(find_correction(star, tri, {0, 1, 2}).has_value());
    EXPECT_FALSE(find_correction(star, tri, {1}).has_value());
}

TEST(oracle, wrong_rewrite_is_rejected) {
    // Deleting the middle of a path is a Z measurement, not an X measurement:
    // compare the X projection against the Z prediction.
    const QubitGraph g = make(3, {{0, 1}, {1, 2}});
    const StateVector xsim = project_pauli(graph_state_vector(g), Pauli::kX, 1);
    const StateVector zpred = graph_state_vector(measure_z(g, 1));
    EXPECT_FALSE(find_correction(xsim, zpred, {0, 2}).has_value());
}

TEST(oracle, verify_rule_size_limit) {
    Rng rng(1);
    EXPECT_THROW(verify_rule(random_graph(9, rng), Rewrite::z(0)), std::length_error);
}

TEST(oracle, all_graphs_counts) {
    EXPECT_EQ(all_graphs(1).size(), 1u);
    EXPECT_EQ(all_graphs(3).size(), 8u);
    EXPECT_EQ(all_graphs(4).size(), 64u);
}

TEST(oracle, exhaustive_up_to_four_vertices) {
    const RuleTally t = exhaustive_rule_sweep(4);
    for (size_t r = 0; r < kRuleCount; ++r) {
        EXPECT_TRUE(t.passed(r)) << "rule " << r + 1 << ": " << t.failures[r] << "/" << t.cases[r];
    }
}

TEST(oracle, random_six_to_eight_vertex_sample) {
    Rng rng(2026);
    RuleTally t;
    for (int trial = 0; trial < 6; ++trial) {
        t += check_all_rules(random_graph(6 + rng.uniform_index(3), rng));
    }
    EXPECT_TRUE(t.all_passed());
}
