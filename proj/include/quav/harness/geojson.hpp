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
 * GeoJSON (RFC 7946) output of planned paths: a FeatureCollection with the
 * path as a LineString in [lon, lat] order followed by one Polygon per
 * obstacle. The reader accepts the same documents back.
 */
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "quav/harness/pipeline.hpp"

namespace quav::harness {

struct GeoJsonPlan {
    std::vector<geo::GeoPoint> path;
    std::vector<std::vector<geo::GeoPoint>> obstacles;
};

/// @throws Error(EmptyPath) for fewer than two waypoints.
std::string plan_to_geojson(const PlanResult &r, const Scenario &s);

/// @throws Error(EmptyPath) or Error(IoError).
void emit_geojson(const PlanResult &r, const Scenario &s, const std::filesystem::path &file);

/// First LineString feature plus all Polygon outer rings.
/// @throws Error(ParseError).
GeoJsonPlan parse_geojson_plan(std::string_view text);

/// @throws Error(IoError) or Error(ParseError).
GeoJsonPlan load_geojson_plan(const std::filesystem::path &file);

} // namespace quav::harness
