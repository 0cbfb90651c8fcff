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
#pragma once

#include "quav/baselines/environment.hpp"
#include "quav/graphplan/candidates.hpp"

namespace quav::baselines {

/**
 * @brief Shortest path by edge length (binary-heap Dijkstra, ties by node
 * index). start == end gives a single-node, zero-length path.
 * @throws Error(IndexOutOfRange), Error(NoPathExists).
 */
graphplan::CandidatePath dijkstra_oracle(const graphplan::SearchGraph &g, int start, int end);

/// The 8-connected graph of free nodes and free edges of @p map.
graphplan::SearchGraph clearance_graph(const ClearanceMap &map);

/**
 * @brief Clear route from a to b over a lattice of spacing @p resolution,
 * searched in a window around both points that widens until a route is
 * found or the environment bounds are covered.
 *
 * Both points must be clear. Returns waypoints from a to b.
 * @throws Error(NoPathExists).
 */
std::vector<Point2> route_between(const Environment &env, const Point2 &a, const Point2 &b,
                                  double resolution);

} // namespace quav::baselines
