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

#include <cmath>

namespace quav::geo {

/// Planar point in projected meters (easting, northing).
struct Point2 {
    double x{0.0};
    double y{0.0};

    friend bool operator==(const Point2 &, const Point2 &) = default;

    Point2 &operator+=(const Point2 &o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Point2 &operator-=(const Point2 &o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
};

inline Point2 operator+(Point2 a, const Point2 &b) { return a += b; }
inline Point2 operator-(Point2 a, const Point2 &b) { return a -= b; }
inline Point2 operator*(double s, const Point2 &p) { return {s * p.x, s * p.y}; }
inline Point2 operator*(const Point2 &p, double s) { return {s * p.x, s * p.y}; }

inline double dot(const Point2 &a, const Point2 &b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point2 &a, const Point2 &b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point2 &a) { return std::hypot(a.x, a.y); }
inline double distance(const Point2 &a, const Point2 &b) { return norm(b - a); }

} // namespace quav::geo
