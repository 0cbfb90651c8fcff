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
#include "quav/graphplan/segmentation.hpp"

#include "quav/error.hpp"

namespace quav::graphplan {

SegmentedPath segment_straight_path(const geo::Point2 &start, const geo::Point2 &end,
                                    int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "segment count must be >= 1");
    }
    const double total = geo::distance(start, end);
    if (total == 0.0) {
        throw Error(ErrorCode::ZeroDistance, "start and end coincide");
    }

    SegmentedPath out;
    out.count = n;
    out.step = total / n;
    out.waypoints.reserve(static_cast<std::size_t>(n) + 1);
    out.waypoints.push_back(start);

    geo::Point2 current = start;
    for (int i = 1; i < n; ++i) {
        const geo::Point2 to_end = end - current;
        const double remaining = geo::norm(to_end);
        const geo::Point2 dir{to_end.x / remaining, to_end.y / remaining};
        current = current + out.step * dir;
        out.waypoints.push_back(current);
    }
    out.waypoints.push_back(end);

    out.edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.edges.push_back({out.waypoints[static_cast<std::size_t>(i)],
                             out.waypoints[static_cast<std::size_t>(i) + 1]});
    }
    return out;
}

} // namespace quav::graphplan
