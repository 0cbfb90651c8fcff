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
 * WGS84 Universal Transverse Mercator projection (6th order Krüger series).
 */
#pragma once

#include "quav/geo/point.hpp"

namespace quav::geo {

/// Geodetic coordinates in degrees.
struct GeoPoint {
    double lat{0.0};
    double lon{0.0};

    friend bool operator==(const GeoPoint &, const GeoPoint &) = default;
};

enum class Hemisphere { North, South };

/// Projected UTM coordinates in meters.
struct UtmPoint {
    double easting{0.0};
    double northing{0.0};
    int zone{1};
    Hemisphere hemisphere{Hemisphere::North};

    /// Planar position used by all planning geometry.
    [[nodiscard]] Point2 xy() const { return {easting, northing}; }
};

enum class ProjectionWarning { None, ZoneMismatch };

/// Central meridian of a UTM zone, in degrees.
double central_meridian(int zone);

/// Standard zone for a longitude (no Norway/Svalbard exceptions).
int zone_for_longitude(double lon);

/**
 * @brief Project geodetic coordinates into the given UTM zone; the
 * hemisphere follows the sign of the latitude.
 *
 * Uses k0 = 0.9996, false easting 500 km, false northing 10000 km in the
 * southern hemisphere. Longitudes more than 18 degrees from the central
 * meridian are still projected but flagged through @p warning.
 *
 * @throws Error(OutOfBounds) for non-finite or out-of-range lat/lon, or a
 * zone outside 1..60.
 */
UtmPoint project_to_utm(const GeoPoint &p, int zone,
                        ProjectionWarning *warning = nullptr);

/// As above with a fixed hemisphere, so points on both sides of the equator
/// share one northing origin.
UtmPoint project_to_utm(const GeoPoint &p, int zone, Hemisphere hemisphere,
                        ProjectionWarning *warning = nullptr);

/**
 * @brief Inverse projection.
 *
 * @throws Error(OutOfBounds) for easting outside [0, 1e6] m, northing
 * outside [0, 1e7] m, or an invalid zone.
 */
GeoPoint unproject_from_utm(const UtmPoint &p);

} // namespace quav::geo
