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

#include <json.hpp>

#include "quav/geo/projection.hpp"

namespace quav::harness::detail {

/**
 * @brief Outer rings from a GeoJSON FeatureCollection, Feature, geometry, or
 * array of those. Polygon and MultiPolygon geometries are accepted; rings
 * with holes are rejected and the duplicated closing vertex is dropped.
 * @throws Error(ParseError) naming the offending feature.
 */
std::vector<std::vector<geo::GeoPoint>> parse_obstacle_collection(const nlohmann::json &doc);

/// One [lon, lat] position. @throws Error(ParseError).
geo::GeoPoint parse_position(const nlohmann::json &pos, const std::string &where);

} // namespace quav::harness::detail
