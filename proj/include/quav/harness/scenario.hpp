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
 * Scenario files: JSON with lat/lon endpoints, GeoJSON obstacles and
 * per-planner settings. Loading projects everything into one UTM zone and
 * applies the obstacle buffer scale.
 *
 * Top-level keys: name, description, utm_zone, start, end, obstacles,
 * buffer_scale, bounds_margin, cost, qaoa, astar, rrt. Only start and end
 * are required; unknown keys are rejected.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "quav/baselines/astar.hpp"
#include "quav/baselines/environment.hpp"
#include "quav/baselines/rrt.hpp"
#include "quav/cost/cost.hpp"
#include "quav/geo/polygon.hpp"
#include "quav/geo/projection.hpp"
#include "quav/qaoa/encoding.hpp"

namespace quav::harness {

struct QaoaSettings {
    int qubits{20};
    int layers{5};
    int steps{60};
    double learning_rate{0.1};
    /// Measurements drawn from the optimized state for decoding.
    std::size_t shots{1024};
    std::uint64_t seed{0};
    qaoa::EncodingMode encoding{qaoa::EncodingMode::Segment};
    /// Continuity coupling between consecutive qubits (normalized units).
    double coupling{0.5};
    /// Optimize on shot estimates (using `shots`) instead of exact values.
    bool shot_loss{false};
};

struct RrtSettings {
    double step{1.0};
    int max_iterations{1000};
    double goal_bias{0.05};
};

struct Scenario {
    std::string name;
    std::string description;
    int utm_zone{49};
    geo::Hemisphere hemisphere{geo::Hemisphere::North};
    geo::GeoPoint start_geo;
    geo::GeoPoint end_geo;
    /// Obstacle outer rings as loaded (lat/lon, open).
    std::vector<std::vector<geo::GeoPoint>> obstacle_rings;

    geo::Point2 start;
    geo::Point2 end;
    /// Projected and buffered obstacles.
    std::vector<geo::ObstaclePolygon> obstacles;

    geo::BufferScale buffer_scale;
    double bounds_margin{20.0};
    cost::CostConfig cost;
    QaoaSettings qaoa;
    baselines::AStarConfig astar;
    RrtSettings rrt;

    /// Obstacles, clearance = cost.buffer_distance, planning bounds.
    [[nodiscard]] baselines::Environment environment() const;
    [[nodiscard]] geo::GeoPoint to_geo(const geo::Point2 &p) const;
};

/**
 * @throws Error(ParseError) with line or field for malformed input and
 * unknown keys; Error(ValidationError) naming the violated invariant.
 */
Scenario parse_scenario(std::string_view json_text, std::string_view fallback_name = "scenario");

/// @throws Error(IoError) plus everything parse_scenario throws.
Scenario load_scenario(const std::filesystem::path &path);

/// Re-checks the invariants after programmatic edits (CLI overrides).
/// @throws Error(ValidationError).
void validate_scenario(const Scenario &s);

} // namespace quav::harness
