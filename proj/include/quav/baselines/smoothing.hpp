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

#include <vector>

#include "quav/baselines/environment.hpp"
#include "quav/graphplan/candidates.hpp"

namespace quav::baselines {

inline constexpr int kSmoothingPasses = 10;

/// Greedy line-of-sight pruning: from each kept point, jump to the furthest
/// later point reachable by a clear segment.
std::vector<Point2> shortcut_waypoints(const std::vector<Point2> &pts, const Environment &env);

/**
 * @brief Shortcut pruning, then @p passes sweeps moving each interior
 * waypoint by @p factor toward the midpoint of its neighbours; a move is
 * kept only if both adjacent segments stay clear. Never lengthens the path.
 * factor 0 returns the input unchanged.
 */
std::vector<Point2> smooth_waypoints(const std::vector<Point2> &pts, const Environment &env,
                                     double factor, int passes = kSmoothingPasses);

graphplan::CandidatePath smooth_path(const graphplan::CandidatePath &p, const Environment &env,
                                     double factor);

} // namespace quav::baselines
