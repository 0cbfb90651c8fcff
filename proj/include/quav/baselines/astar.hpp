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

struct AStarConfig {
    double resolution{0.5};
    /// Per-pass pull toward the chord; 0 disables smoothing.
    double smoothing{0.2};

    /// @throws Error(InvalidArgument) for r <= 0 or smoothing outside [0, 1].
    void validate() const;
};

/**
 * @brief Shortest lattice path between two free nodes of @p map.
 *
 * Euclidean heuristic; the open list orders by f, then lower heuristic,
 * then node index. The returned length is the exact lattice length.
 * @throws Error(NoPathExists).
 */
graphplan::CandidatePath astar_search(const ClearanceMap &map, int start, int goal);

/**
 * @brief A* on a lattice anchored at @p start, finishing with a straight
 * clear hop into @p end, then smoothed.
 * @throws Error(StartInObstacle), Error(EndInObstacle), Error(NoPathExists).
 */
graphplan::CandidatePath astar_plan(const Point2 &start, const Point2 &end,
                                    const Environment &env, const AStarConfig &cfg = {});

} // namespace quav::baselines
