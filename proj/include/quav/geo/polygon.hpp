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
 * Obstacle polygons and the segment/polygon predicates used by cost
 * assignment and the classical planners. All coordinates are planar meters.
 */
#pragma once

#include <span>
#include <vector>

#include "quav/geo/point.hpp"

namespace quav::geo {

/// Straight edge between two distinct points.
struct Segment {
    Point2 a;
    Point2 b;

    [[nodiscard]] double length() const { return distance(a, b); }
};

/// Axis scale factors applied by polygon buffering; (1, 1) means unbuffered.
struct BufferScale {
    double sx{1.0};
    double sy{1.0};
};

/**
 * @brief Simple closed polygon. The ring is stored open: the closing edge
 * runs from the last vertex back to the first.
 */
struct ObstaclePolygon {
    std::vector<Point2> vertices;
    BufferScale scale{};
};

/// Axis-aligned bounding box.
struct Bounds {
    Point2 min;
    Point2 max;

    [[nodiscard]] bool contains(const Point2 &p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
    [[nodiscard]] Bounds expanded(double margin) const {
        return {{min.x - margin, min.y - margin}, {max.x + margin, max.y + margin}};
    }
};

Bounds bounds_of(std::span<const Point2> points);
Bounds bounds_of(const ObstaclePolygon &o);

/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
int orientation(const Point2 &a, const Point2 &b, const Point2 &c);

/// Shoelace area, positive for counter-clockwise rings.
double signed_area(const ObstaclePolygon &o);

/// Area centroid. @throws Error(DegeneratePolygon) on zero area.
Point2 centroid(const ObstaclePolygon &o);

bool is_convex(const ObstaclePolygon &o);

/// True when no two non-adjacent edges touch.
bool is_simple(const ObstaclePolygon &o);

/**
 * @brief Checks vertex count, finiteness, non-zero area and simplicity.
 * @throws Error(DegeneratePolygon) naming the failed condition.
 */
void validate_polygon(const ObstaclePolygon &o);

/**
 * @brief Scale every vertex about the area centroid:
 * v' = c + diag(sx, sy) (v - c).
 *
 * @throws Error(InvalidArgument) if a factor is below 1,
 * Error(DegeneratePolygon) if the area is zero.
 */
ObstaclePolygon buffer_obstacle(const ObstaclePolygon &o, double sx, double sy);

/**
 * @brief Fixed-margin outward offset of a convex polygon (Minkowski sum with
 * a disk), with each corner arc approximated by @p arc_steps chords placed
 * outside the true arc. Non-convex input is offset per edge and may
 * self-overlap at reflex corners; planners query distances instead.
 */
ObstaclePolygon offset_polygon(const ObstaclePolygon &o, double margin,
                               int arc_steps = 8);

/// Even-odd containment; boundary points count as inside.
bool point_in_polygon(const Point2 &p, const ObstaclePolygon &o);

/// True if the closed segments share at least one point.
bool segments_intersect(const Segment &s, const Segment &t);

double point_segment_distance(const Point2 &p, const Segment &s);
double segment_segment_distance(const Segment &s, const Segment &t);

/// 0 inside the polygon, otherwise the distance to its boundary.
double point_polygon_distance(const Point2 &p, const ObstaclePolygon &o);

/// True if the segment touches or crosses the boundary or lies inside.
bool segment_intersects(const Segment &s, const ObstaclePolygon &o);

/// 0 when intersecting, otherwise the minimum distance to the boundary.
double segment_polygon_distance(const Segment &s, const ObstaclePolygon &o);

/// Polygon edge i, from vertex i to vertex i+1 (wrapping).
inline Segment polygon_edge(const ObstaclePolygon &o, std::size_t i) {
    return {o.vertices[i], o.vertices[(i + 1) % o.vertices.size()]};
}

} // namespace quav::geo
