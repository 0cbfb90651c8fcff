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
#include "quav/cost/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "quav/error.hpp"

namespace quav::cost {

void CostConfig::validate() const {
    auto require = [](bool ok, const char *what) {
        if (!ok) {
            throw Error(ErrorCode::InvalidArgument, what);
        }
    };
    require(std::isfinite(obstacle_penalty) && obstacle_penalty > 0.0,
            "obstacle_penalty must be > 0");
    require(std::isfinite(start_bias), "start_bias must be finite");
    require(std::isfinite(buffer_distance) && buffer_distance > 0.0,
            "buffer_distance must be > 0");
    require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be >= 0");
    require(std::isfinite(smoothness_weight) && smoothness_weight >= 0.0,
            "smoothness_weight must be >= 0");
}

double distance_cost(const geo::Segment &e) { return e.length(); }

double min_clearance(const geo::Segment &e,
                     std::span<const geo::ObstaclePolygon> obstacles) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &o : obstacles) {
        best = std::min(best, geo::segment_polygon_distance(e, o));
        if (best == 0.0) {
            break;
        }
    }
    return best;
}

double obstacle_penalty(const geo::Segment &e,
                        std::span<const geo::ObstaclePolygon> obstacles,
                        const CostConfig &cfg) {
    for (const auto &o : obstacles) {
        if (geo::segment_intersects(e, o)) {
            return cfg.obstacle_penalty;
        }
    }
    const double d = min_clearance(e, obstacles);
    if (std::isinf(d)) {
        return 0.0;
    }
    return cfg.lambda * std::exp(-d / cfg.buffer_distance);
}

CostVector normalize(std::vector<double> raw) {
    CostVector out;
    double scale = 0.0;
    for (double c : raw) {
        scale = std::max(scale, std::abs(c));
    }
    out.scale = scale > 0.0 ? scale : 1.0;
    out.normalized.reserve(raw.size());
    for (double c : raw) {
        out.normalized.push_back(c / out.scale);
    }
    out.raw = std::move(raw);
    return out;
}

CostAssignment assign_costs(std::span<const geo::Segment> edges,
                            std::span<const geo::ObstaclePolygon> obstacles,
                            const CostConfig &cfg) {
    if (edges.empty()) {
        throw Error(ErrorCode::EmptyPath, "no edges to cost");
    }
    cfg.validate();

    CostAssignment out;
    out.edges.reserve(edges.size());
    std::vector<double> raw;
    raw.reserve(edges.size());

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const geo::Segment &e = edges[i];
        if (e.a == e.b) {
            throw Error(ErrorCode::InvalidArgument,
                        "zero-length edge " + std::to_string(i));
        }
        EdgeAssessment a;
        a.clearance = min_clearance(e, obstacles);
        a.intersects = a.clearance == 0.0 && !obstacles.empty();
        if (a.intersects) {
            // Double-check: clearance 0 comes only from an intersection.
            a.intersects = std::any_of(obstacles.begin(), obstacles.end(),
                                       [&](const geo::ObstaclePolygon &o) {
                                           return geo::segment_intersects(e, o);
                                       });
        }
        a.buffer_violation = a.clearance < cfg.buffer_distance;

        double c = 0.0;
        if (a.intersects) {
            c = cfg.obstacle_penalty;
        } else {
            c = distance_cost(e);
            if (!std::isinf(a.clearance)) {
                c += cfg.lambda * std::exp(-a.clearance / cfg.buffer_distance);
            }
            if (cfg.smoothness_weight > 0.0 && i > 0 && edges[i - 1].b == e.a) {
                const geo::Point2 d0 = edges[i - 1].b - edges[i - 1].a;
                const geo::Point2 d1 = e.b - e.a;
                c += cfg.smoothness_weight *
                     std::abs(std::atan2(geo::cross(d0, d1), geo::dot(d0, d1)));
            }
            if (i == 0) {
                c += cfg.start_bias;
            }
        }
        raw.push_back(c);
        out.edges.push_back(a);
    }
    out.costs = normalize(std::move(raw));
    return out;
}

} // namespace quav::cost
