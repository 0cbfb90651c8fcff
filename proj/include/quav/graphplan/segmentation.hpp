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

#include "quav/geo/polygon.hpp"

namespace quav::graphplan {

/// Straight start->end line cut into equal steps; one edge per qubit.
struct SegmentedPath {
    std::vector<geo::Point2> waypoints;
    std::vector<geo::Segment> edges;
    double step{0.0};
    int count{0};
};

/**
 * @brief Walks from start toward end in steps of D / n, re-aiming the unit
 * direction at end before every step. The last waypoint is exactly end.
 *
 * @throws Error(InvalidArgument) for n < 1, Error(ZeroDistance) if
 * start == end.
 */
SegmentedPath segment_straight_path(const geo::Point2 &start, const geo::Point2 &end,
                                    int n);

} // namespace quav::graphplan
