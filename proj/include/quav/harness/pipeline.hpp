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
 * End-to-end planning runs for the QAOA planner and the two classical
 * baselines, with common path metrics.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quav/harness/scenario.hpp"
#include "quav/qaoa/optimize.hpp"

namespace quav::harness {

enum class Planner { Quav, AStar, Rrt };

std::string_view to_string(Planner p);
/// Accepts "quav", "astar", "rrt". @throws Error(InvalidArgument).
Planner parse_planner(std::string_view name);

struct PathMetrics {
    double length{0.0};
    /// No segment touches an obstacle.
    bool feasible{false};
    /// Segments closer than the clearance to some obstacle.
    int buffer_violations{0};
};

/// Independent sweep of every path segment against every obstacle.
PathMetrics evaluate_path(std::span<const geo::Point2> path,
                          std::span<const geo::ObstaclePolygon> obstacles, double clearance);

struct PlanResult {
    Planner planner{Planner::Quav};
    std::string scenario;
    std::uint64_t seed{0};
    std::vector<geo::Point2> path;
    std::vector<geo::GeoPoint> path_geo;
    double length{0.0};
    bool feasible{false};
    int buffer_violations{0};

    // QAOA planner only.
    std::optional<qaoa::LossTrace> trace;
    std::optional<qaoa::QaoaParams> params;
    double ground_energy{0.0};
    /// Decoded sample, character q = qubit q.
    std::string bitstring;
    /// Decoded path was feasible before repair.
    bool decoded_feasible{false};
    /// Maximal runs of unusable edges rerouted around obstacles.
    int repaired_runs{0};

    double wall_ms{0.0};
    /// Reason when feasible is false or a stage failed.
    std::string diagnostic;
};

/**
 * @brief Encode, optimize, sample, decode, repair and measure.
 *
 * Repair replaces every maximal run of excluded, colliding or
 * buffer-violating edges by a clearance-respecting detour between the run
 * endpoints. Errors keep their code and are prefixed with the stage name.
 */
PlanResult run_quav(const Scenario &s, std::uint64_t seed);

/// @throws Error tagged with the stage when no path exists.
PlanResult run_astar(const Scenario &s);

/// Seeded RRT; a run that exhausts its iterations throws MaxIterationsExceeded.
PlanResult run_rrt(const Scenario &s, std::uint64_t seed);

PlanResult run_planner(Planner p, const Scenario &s, std::uint64_t seed);

} // namespace quav::harness
