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
 * Candidate path enumeration and the geometric path metrics.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quav/graphplan/grid.hpp"

namespace quav::graphplan {

/// Simple path through a SearchGraph with its length and total turning.
struct CandidatePath {
    std::vector<int> nodes;
    std::vector<Point2> waypoints;
    double length{0.0};
    double angular_deviation{0.0};
};

struct EnumerationOptions {
    std::size_t max_paths{10000};
    /// Only extend along non-decreasing projection on the start->end axis.
    bool monotone{true};
};

/**
 * @brief The up-to-max_paths shortest simple start->end paths.
 *
 * Result order: length (micrometer resolution), then lexicographic node
 * indices. Uses depth-first branch and bound, so it is exact with respect to
 * the cap: no omitted path is shorter than the longest returned one.
 *
 * @throws Error(IndexOutOfRange) for invalid nodes, Error(NoPathExists) when
 * no qualifying path connects start and end.
 */
std::vector<CandidatePath> enumerate_candidate_paths(const SearchGraph &g, int start,
                                                     int end,
                                                     const EnumerationOptions &opts = {});

/// Sum of consecutive Euclidean step lengths.
double path_length(std::span<const Point2> waypoints);

/**
 * @brief Sum of absolute turn angles at interior waypoints, in radians.
 * Paths with fewer than 3 waypoints have zero deviation.
 * @throws Error(DegenerateStep) if any step has zero length.
 */
double angular_deviation(std::span<const Point2> waypoints);

/// Builds a CandidatePath (waypoints and metrics) from graph node indices.
CandidatePath make_candidate(const SearchGraph &g, std::vector<int> nodes);

} // namespace quav::graphplan
