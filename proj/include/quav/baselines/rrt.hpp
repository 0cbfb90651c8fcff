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

#include <cstdint>
#include <vector>

#include "quav/baselines/environment.hpp"
#include "quav/graphplan/candidates.hpp"

namespace quav::baselines {

struct RrtConfig {
    double step{1.0};
    int max_iterations{1000};
    double goal_bias{0.05};
    std::uint64_t seed{0};

    /// @throws Error(InvalidArgument) naming the bad field.
    void validate() const;
};

struct RrtTree {
    std::vector<Point2> nodes;
    /// parent[0] = -1 for the root (start).
    std::vector<int> parent;
};

struct RrtResult {
    graphplan::CandidatePath path;
    RrtTree tree;
    int iterations{0};
};

/**
 * @brief Goal-biased RRT in env.bounds: each iteration samples the end with
 * probability goal_bias (else a uniform point), extends the nearest node by
 * at most one step along a clear segment, and stops once a new node sees
 * the end within one step.
 * @throws Error(StartInObstacle), Error(EndInObstacle),
 * Error(MaxIterationsExceeded) with the partial tree size in the message.
 */
RrtResult rrt_search(const Point2 &start, const Point2 &end, const Environment &env,
                     const RrtConfig &cfg);

graphplan::CandidatePath rrt_plan(const Point2 &start, const Point2 &end,
                                  const Environment &env, const RrtConfig &cfg);

} // namespace quav::baselines
