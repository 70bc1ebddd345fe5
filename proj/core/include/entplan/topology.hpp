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
#include <cstddef>
#include <optional>
#include <vector>

#include "entplan/multigraph.hpp"
#include "entplan/rng.hpp"

namespace entplan {

struct GridPoint {
    int x = 0;
    int y = 0;
    auto operator<=>(const GridPoint&) const = default;
};

/// Rectangular device grid with users placed on distinct cells. Every other
/// cell holds a repeater, which only matters for measuring distance.
class GridNetwork {
  public:
    /// Throws std::invalid_argument if a user lies outside the grid, two users
    /// share a cell, or fewer than two users are given.
    GridNetwork(int width, int height, double edge_length_km, std::vector<GridPoint> users,
                unsigned threshold);

    /// The 5x5, 200 km grid with the six users of the worked example
    /// (0-based indices; label k sits at index k-1).
    static GridNetwork example(unsigned threshold = 7);

    int width() const { return width_; }
    int height() const { return height_; }
    double edge_length_km() const { return edge_length_km_; }
    size_t n_users() const { return users_.size(); }
    const std::vector<GridPoint>& users() const { return users_; }
    const GridPoint& position(UserId u) const;
    /// Distance threshold D.
    unsigned threshold() const { return threshold_; }
    GridNetwork with_threshold(unsigned threshold) const;
    /// Largest user_distance any two cells of this grid can have.
    unsigned max_grid_distance() const;

    bool operator==(const GridNetwork&) const = default;

  private:
    int width_;
    int height_;
    double edge_length_km_;
    std::vector<GridPoint> users_;
    unsigned threshold_;
};

/// Number of devices strictly between two users on a shortest rectilinear
/// route: Manhattan distance minus one. Throws std::invalid_argument if i == j.
unsigned user_distance(const GridNetwork& net, UserId i, UserId j);

/// user_distance(i, j) <= D.
bool edge_allowed(const GridNetwork& net, UserId i, UserId j);

/// Route from i to j through intermediate users such that every hop satisfies
/// edge_allowed. Minimizes the hop count, then the summed user_distance of the
/// hops; remaining ties are broken uniformly at random with `rng` (which is
/// only consumed when a tie actually exists). Returns std::nullopt when the
/// users are disconnected under the threshold.
std::optional<std::vector<UserId>> constrained_path(const GridNetwork& net, UserId i, UserId j,
                                                    Rng& rng);

}  // namespace entplan
