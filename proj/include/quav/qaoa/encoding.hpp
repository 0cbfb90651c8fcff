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
 * Mapping a planning instance onto qubits.
 *
 * Segment mode: qubit i gates segment i of the straight start->end line.
 * Select mode: qubits gate edges of a small lattice laid along the
 * start->end axis (three lanes, forward moves only), keeping the edges of
 * the cheapest lattice paths.
 */
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quav/cost/cost.hpp"
#include "quav/geo/polygon.hpp"
#include "quav/qaoa/problem.hpp"

namespace quav::qaoa {

enum class EncodingMode { Segment, Select };

std::string_view to_string(EncodingMode mode);
/// @throws Error(InvalidArgument) for names other than "segment" / "select".
EncodingMode parse_encoding(std::string_view name);

struct EncodedProblem {
    EncodingMode mode{EncodingMode::Segment};
    geo::Point2 start;
    geo::Point2 end;
    /// Qubit i gates edges[i]; every edge points away from the start.
    std::vector<geo::Segment> edges;
    std::vector<cost::EdgeAssessment> assessments;
    QaoaProblem problem;
};

EncodedProblem encode_segment(const geo::Point2 &start, const geo::Point2 &end, int qubits,
                              std::span<const geo::ObstaclePolygon> obstacles,
                              const cost::CostConfig &cfg, double coupling);

struct SelectOptions {
    /// Lattice columns between start and end; 0 picks enough for the qubits.
    int columns{0};
    /// Lane spacing in meters; 0 uses the column spacing.
    double lane_spacing{0.0};
};

/**
 * @brief Select-mode encoding with at most @p qubits edges.
 *
 * Lattice paths are ranked by summed raw edge cost; their edges are added
 * path by path while they fit. Consecutive qubits are coupled only when
 * their edges share an endpoint.
 */
EncodedProblem encode_select(const geo::Point2 &start, const geo::Point2 &end, int qubits,
                             std::span<const geo::ObstaclePolygon> obstacles,
                             const cost::CostConfig &cfg, double coupling,
                             const SelectOptions &opts = {});

} // namespace quav::qaoa
