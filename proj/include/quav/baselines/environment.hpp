// Copyright 2026 The QUAV Planner Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Obstacle environment shared by the classical planners and the repair
 * router, and the clearance-checked grid they search.
 */
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "quav/geo/polygon.hpp"
#include "quav/graphplan/grid.hpp"

namespace quav::baselines {

using geo::Point2;

struct Environment {
    std::vector<geo::ObstaclePolygon> obstacles;
    /// Minimum distance every path point keeps from every obstacle.
    double clearance{0.0};
    /// Sampling and search region.
    geo::Bounds bounds;

    /// Distance to the nearest obstacle (0 inside, +inf without obstacles).
    [[nodiscard]] double distance(const Point2 &p) const;
    [[nodiscard]] double distance(const geo::Segment &s) const;
    /// Outside every obstacle and at least `clearance` away.
    [[nodiscard]] bool point_clear(const Point2 &p) const;
    [[nodiscard]] bool segment_clear(const geo::Segment &s) const;
};

/// Bounds span start, end and every obstacle vertex, grown by @p margin.
Environment make_environment(std::vector<geo::ObstaclePolygon> obstacles, double clearance,
                             const Point2 &start, const Point2 &end, double margin);

/**
 * @brief 8-connected lattice over a region, with one node exactly at
 * @p anchor. A node is free if its point is clear; an edge is free if the
 * whole segment is clear.
 */
class ClearanceMap {
  public:
    /// @throws Error(InvalidArgument) for r <= 0 or more than 2^24 nodes.
    ClearanceMap(const Environment &env, const geo::Bounds &region, const Point2 &anchor,
                 double resolution);

    [[nodiscard]] const graphplan::Grid &grid() const { return grid_; }
    [[nodiscard]] const Environment &environment() const { return *env_; }
    [[nodiscard]] bool node_free(int idx) const {
        return free_[static_cast<std::size_t>(idx)] != 0;
    }
    /// For grid-adjacent u, v (including diagonals).
    [[nodiscard]] bool edge_free(int u, int v) const;

    /// Free nodes within two cells of @p p joined to it by a clear segment,
    /// with their distances. A node at p itself is returned with distance 0.
    [[nodiscard]] std::vector<std::pair<int, double>> attach(const Point2 &p) const;

  private:
    const Environment *env_;
    graphplan::Grid grid_;
    std::vector<double> dist_;
    std::vector<std::uint8_t> free_;
};

/// Exact length of a lattice path: orthogonal steps * r + diagonal steps * r sqrt(2).
double lattice_length(const graphplan::Grid &g, std::span<const int> nodes);

} // namespace quav::baselines
