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
#include "quav/geo/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quav/error.hpp"

namespace quav::geo {

Bounds bounds_of(std::span<const Point2> points) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    Bounds b{{inf, inf}, {-inf, -inf}};
    for (const auto &p : points) {
        b.min.x = std::min(b.min.x, p.x);
        b.min.y = std::min(b.min.y, p.y);
        b.max.x = std::max(b.max.x, p.x);
        b.max.y = std::max(b.max.y, p.y);
    }
    return b;
}

Bounds bounds_of(const ObstaclePolygon &o) { return bounds_of(o.vertices); }

int orientation(const Point2 &a, const Point2 &b, const Point2 &c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

double signed_area(const ObstaclePolygon &o) {
    const auto &v = o.vertices;
    if (v.size() < 3) {
        return 0.0;
    }
    // Shift to the first vertex to limit cancellation at UTM magnitudes.
    const Point2 base = v.front();
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        twice += cross(v[i] - base, v[i + 1] - base);
    }
    return 0.5 * twice;
}

Point2 centroid(const ObstaclePolygon &o) {
    const double area = signed_area(o);
    if (area == 0.0 || !std::isfinite(area)) {
        throw Error(ErrorCode::DegeneratePolygon, "polygon has zero area");
    }
    const auto &v = o.vertices;
    const Point2 base = v.front();
    Point2 acc{};
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const Point2 p = v[i] - base;
        const Point2 q = v[i + 1] - base;
        const double w = cross(p, q);
        acc += w * (p + q);
    }
    return base + (1.0 / (6.0 * area)) * acc;
}

bool is_convex(const ObstaclePolygon &o) {
    const auto &v = o.vertices;
    const std::size_t n = v.size();
    if (n < 3) {
        return false;
    }
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int turn = orientation(v[i], v[(i + 1) % n], v[(i + 2) % n]);
        if (turn == 0) {
            continue;
        }
        if (sign == 0) {
            sign = turn;
        } else if (turn != sign) {
            return false;
        }
    }
    return sign != 0;
}

bool is_simple(const ObstaclePolygon &o) {
    const std::size_t n = o.vertices.size();
    if (n < 3) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Segment ei = polygon_edge(o, i);
        if (ei.a == ei.b) {
            return false;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Segment ej = polygon_edge(o, j);
            if (!adjacent) {
                if (segments_intersect(ei, ej)) {
                    return false;
                }
                continue;
            }
            // Adjacent edges share exactly one vertex; a fold-back overlaps.
            const Point2 shared = (j == i + 1) ? ei.b : ei.a;
            const Point2 p = (j == i + 1) ? ei.a : ei.b;
            const Point2 q = (j == i + 1) ? ej.b : ej.a;
            if (orientation(p, shared, q) == 0 && dot(p - shared, q - shared) > 0.0) {
                return false;
            }
        }
    }
    return true;
}

void validate_polygon(const ObstaclePolygon &o) {
    if (o.vertices.size() < 3) {
        throw Error(ErrorCode::DegeneratePolygon, "polygon needs at least 3 vertices");
    }
    for (const auto &p : o.vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw Error(ErrorCode::DegeneratePolygon, "non-finite vertex");
        }
    }
    if (signed_area(o) == 0.0) {
        throw Error(ErrorCode::DegeneratePolygon, "polygon has zero area");
    }
    if (!is_simple(o)) {
        throw Error(ErrorCode::DegeneratePolygon, "polygon ring self-intersects");
    }
}

ObstaclePolygon buffer_obstacle(const ObstaclePolygon &o, double sx, double sy) {
    if (!(sx >= 1.0) || !(sy >= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "buffer scale factors must be >= 1");
    }
    const Point2 c = centroid(o);
    ObstaclePolygon out;
    out.vertices.reserve(o.vertices.size());
    for (const auto &v : o.vertices) {
        out.vertices.push_back({c.x + sx * (v.x - c.x), c.y + sy * (v.y - c.y)});
    }
    out.scale = {o.scale.sx * sx, o.scale.sy * sy};
    return out;
}

ObstaclePolygon offset_polygon(const ObstaclePolygon &o, double margin, int arc_steps) {
    if (!(margin >= 0.0) || arc_steps < 1) {
        throw Error(ErrorCode::InvalidArgument, "offset needs margin >= 0, arc_steps >= 1");
    }
    const double area = signed_area(o);
    if (area == 0.0) {
        throw Error(ErrorCode::DegeneratePolygon, "polygon has zero area");
    }
    std::vector<Point2> ring = o.vertices;
    if (area < 0.0) {
        std::reverse(ring.begin(), ring.end());
    }
    const std::size_t n = ring.size();
    auto outward = [&](std::size_t i) {
        const Point2 d = ring[(i + 1) % n] - ring[i];
        const double len = norm(d);
        return Point2{d.y / len, -d.x / len};
    };

    ObstaclePolygon out;
    out.scale = o.scale;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 n_in = outward((i + n - 1) % n);
        const Point2 n_out = outward(i);
        const double a0 = std::atan2(n_in.y, n_in.x);
        double sweep = std::atan2(cross(n_in, n_out), dot(n_in, n_out));
        if (sweep <= 0.0) {
            // Reflex or straight corner.
            out.vertices.push_back(ring[i] + margin * n_in);
            out.vertices.push_back(ring[i] + margin * n_out);
            continue;
        }
        const double step = sweep / arc_steps;
        const double r_out = margin / std::cos(0.5 * step);
        out.vertices.push_back(ring[i] + margin * n_in);
        for (int k = 0; k < arc_steps; ++k) {
            const double a = a0 + (k + 0.5) * step;
            out.vertices.push_back(ring[i] + r_out * Point2{std::cos(a), std::sin(a)});
        }
        out.vertices.push_back(ring[i] + margin * n_out);
    }
    return out;
}

namespace {

bool on_segment(const Point2 &p, const Segment &s) {
    return orientation(s.a, s.b, p) == 0 && std::min(s.a.x, s.b.x) <= p.x &&
           p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
           p.y <= std::max(s.a.y, s.b.y);
}

} // namespace

bool segments_intersect(const Segment &s, const Segment &t) {
    const int o1 = orientation(s.a, s.b, t.a);
    const int o2 = orientation(s.a, s.b, t.b);
    const int o3 = orientation(t.a, t.b, s.a);
    const int o4 = orientation(t.a, t.b, s.b);
    if (o1 != o2 && o3 != o4) {
        return true;
    }
    return (o1 == 0 && on_segment(t.a, s)) || (o2 == 0 && on_segment(t.b, s)) ||
           (o3 == 0 && on_segment(s.a, t)) || (o4 == 0 && on_segment(s.b, t));
}

double point_segment_distance(const Point2 &p, const Segment &s) {
    const Point2 d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) {
        return distance(p, s.a);
    }
    const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return distance(p, s.a + t * d);
}

double segment_segment_distance(const Segment &s, const Segment &t) {
    if (segments_intersect(s, t)) {
        return 0.0;
    }
    return std::min({point_segment_distance(s.a, t), point_segment_distance(s.b, t),
                     point_segment_distance(t.a, s), point_segment_distance(t.b, s)});
}

bool point_in_polygon(const Point2 &p, const ObstaclePolygon &o) {
    const std::size_t n = o.vertices.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Segment e = polygon_edge(o, i);
        if (on_segment(p, e)) {
            return true;
        }
        const Point2 &a = e.a;
        const Point2 &b = e.b;
        if ((a.y > p.y) != (b.y > p.y)) {
            // Crossing test via orientation keeps the comparison exact in sign.
            const int turn = orientation(a, b, p);
            if ((b.y > a.y) ? turn > 0 : turn < 0) {
                inside = !inside;
            }
        }
    }
    return inside;
}

double point_polygon_distance(const Point2 &p, const ObstaclePolygon &o) {
    if (point_in_polygon(p, o)) {
        return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < o.vertices.size(); ++i) {
        best = std::min(best, point_segment_distance(p, polygon_edge(o, i)));
    }
    return best;
}

bool segment_intersects(const Segment &s, const ObstaclePolygon &o) {
    if (point_in_polygon(s.a, o) || point_in_polygon(s.b, o)) {
        return true;
    }
    for (std::size_t i = 0; i < o.vertices.size(); ++i) {
        if (segments_intersect(s, polygon_edge(o, i))) {
            return true;
        }
    }
    return false;
}

double segment_polygon_distance(const Segment &s, const ObstaclePolygon &o) {
    if (segment_intersects(s, o)) {
        return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < o.vertices.size(); ++i) {
        best = std::min(best, segment_segment_distance(s, polygon_edge(o, i)));
    }
    return best;
}

} // namespace quav::geo
