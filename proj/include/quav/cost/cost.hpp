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
 * Per-edge cost assignment. Each edge becomes one qubit; the normalized
 * costs are the single-qubit coefficients of the cost Hamiltonian.
 *
 * Edge cost:
 *   - intersects an obstacle:  obstacle_penalty (replaces everything else)
 *   - otherwise:               length + lambda * exp(-d_min / d_s)
 *   - edge 0, if clear:        start_bias is added on top
 */
#pragma once

#include <span>
#include <vector>

#include "quav/geo/polygon.hpp"

namespace quav::cost {

struct CostConfig {
    double obstacle_penalty{1.0e6};
    double start_bias{-1.0e3};
    /// d_s: scale of the proximity penalty and the minimum clearance.
    double buffer_distance{5.0};
    double lambda{100.0};
    double smoothness_weight{0.0};

    /// @throws Error(InvalidArgument) naming the violated field.
    void validate() const;
};

/// Raw per-edge costs and their max-abs normalization.
struct CostVector {
    std::vector<double> raw;
    std::vector<double> normalized;
    double scale{1.0};

    [[nodiscard]] std::size_t size() const { return raw.size(); }
};

/// Geometry facts gathered while costing an edge.
struct EdgeAssessment {
    bool intersects{false};
    /// Minimum distance to any obstacle; +inf without obstacles.
    double clearance{0.0};
    /// clearance < buffer_distance.
    bool buffer_violation{false};
};

struct CostAssignment {
    CostVector costs;
    std::vector<EdgeAssessment> edges;
};

/// Euclidean length in meters.
double distance_cost(const geo::Segment &e);

/// Minimum segment-obstacle distance over all obstacles (+inf if none).
double min_clearance(const geo::Segment &e, std::span<const geo::ObstaclePolygon> obstacles);

/**
 * @brief obstacle_penalty on intersection, else lambda * exp(-d_min / d_s);
 * zero without obstacles.
 */
double obstacle_penalty(const geo::Segment &e,
                        std::span<const geo::ObstaclePolygon> obstacles,
                        const CostConfig &cfg);

/// Divides by max |raw|; a zero vector keeps scale 1.
CostVector normalize(std::vector<double> raw);

/**
 * @brief Costs an ordered edge list. Edge 0 is the start segment.
 *
 * With a non-zero smoothness weight, edges that continue the previous edge
 * also pay weight * |turn angle| between them.
 *
 * @throws Error(EmptyPath) for no edges, Error(InvalidArgument) for an
 * invalid config or a zero-length edge.
 */
CostAssignment assign_costs(std::span<const geo::Segment> edges,
                            std::span<const geo::ObstaclePolygon> obstacles,
                            const CostConfig &cfg);

} // namespace quav::cost
