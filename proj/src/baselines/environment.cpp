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
#include "quav/baselines/environment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "quav/error.hpp"

namespace quav::baselines {

double Environment::distance(const Point2 &p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &o : obstacles) {
        best = std::min(best, geo::point_polygon_distance(p, o));
    }
    return best;
}

double Environment::distance(const geo::Segment &s) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &o : obstacles) {
        best = std::min(best, geo::segment_polygon_distance(s, o));
        if (best == 0.0) {
            break;
        }
    }
    return best;
}

bool Environment::point_clear(const Point2 &p) const {
    for (const auto &o : obstacles) {
        const double d = geo::point_polygon_distance(p, o);
        if (d == 0.0 || d < clearance) {
            return false;
        }
    }
    return true;
}

bool Environment::segment_clear(const geo::Segment &s) const {
    for (const auto &o : obstacles) {
        if (geo::segment_intersects(s, o)) {
            return false;
        }
        if (clearance > 0.0 && geo::segment_polygon_distance(s, o) < clearance) {
            return false;
        }
    }
    return true;
}

Environment make_environment(std::vector<geo::ObstaclePolygon> obstacles, double clearance,
                             const Point2 &start, const Point2 &end, double margin) {
    if (!(clearance >= 0.0) || !(margin >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "clearance and margin must be >= 0");
    }
    std::vector<Point2> pts{start, end};
    for (const auto &o : obstacles) {
        pts.insert(pts.end(), o.vertices.begin(), o.vertices.end());
    }
    Environment env;
    env.bounds = geo::bounds_of(pts).expanded(margin);
    env.obstacles = std::move(obstacles);
    env.clearance = clearance;
    return env;
}

ClearanceMap::ClearanceMap(const Environment &env, const geo::Bounds &region,
                           const Point2 &anchor, double resolution)
    : env_(&env) {
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
        throw Error(ErrorCode::InvalidArgument, "grid resolution must be > 0");
    }
    const double r = resolution;
    const double ox = anchor.x - r * std::ceil((anchor.x - region.min.x) / r);
    const double oy = anchor.y - r * std::ceil((anchor.y - region.min.y) / r);
    const double nx = std::floor((std::max(region.max.x, anchor.x) - ox) / r) + 1.0;
    const double ny = std::floor((std::max(region.max.y, anchor.y) - oy) / r) + 1.0;
    if (nx * ny > static_cast<double>(1 << 24)) {
        throw Error(ErrorCode::InvalidArgument, "search grid would exceed 2^24 nodes");
    }
    grid_.origin = {ox, oy};
    grid_.resolution = r;
    grid_.nx = static_cast<int>(nx);
    grid_.ny = static_cast<int>(ny);
    grid_.start_node = grid_.nearest_node(anchor);

    dist_.resize(grid_.size());
    free_.resize(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        const Point2 p = grid_.node(static_cast<int>(i));
        dist_[i] = env.distance(p);
        free_[i] = dist_[i] > 0.0 && dist_[i] >= env.clearance ? 1 : 0;
    }
}

bool ClearanceMap::edge_free(int u, int v) const {
    if (!node_free(u) || !node_free(v)) {
        return false;
    }
    const Point2 a = grid_.node(u);
    const Point2 b = grid_.node(v);
    // Distance is 1-Lipschitz, so every point of the edge keeps at least
    // (d(u) + d(v) - length) / 2.
    const double len = geo::distance(a, b);
    const double lower = 0.5 * (dist_[static_cast<std::size_t>(u)] +
                                dist_[static_cast<std::size_t>(v)] - len);
    if (lower > 0.0 && lower >= env_->clearance) {
        return true;
    }
    return env_->segment_clear({a, b});
}

std::vector<std::pair<int, double>> ClearanceMap::attach(const Point2 &p) const {
    std::vector<std::pair<int, double>> out;
    const double r = grid_.resolution;
    const int ci = static_cast<int>(std::floor((p.x - grid_.origin.x) / r));
    const int cj = static_cast<int>(std::floor((p.y - grid_.origin.y) / r));
    for (int j = cj - 1; j <= cj + 2; ++j) {
        for (int i = ci - 1; i <= ci + 2; ++i) {
            if (i < 0 || j < 0 || i >= grid_.nx || j >= grid_.ny) {
                continue;
            }
            const int idx = grid_.index(i, j);
            if (!node_free(idx)) {
                continue;
            }
            const Point2 q = grid_.node(idx);
            const double d = geo::distance(p, q);
            if (d < 1e-9) {
                return {{idx, 0.0}};
            }
            if (d <= 2.0 * r && env_->segment_clear({p, q})) {
                out.emplace_back(idx, d);
            }
        }
    }
    return out;
}

double lattice_length(const graphplan::Grid &g, std::span<const int> nodes) {
    long orth = 0;
    long diag = 0;
    for (std::size_t k = 1; k < nodes.size(); ++k) {
        const int di = std::abs(g.column(nodes[k]) - g.column(nodes[k - 1]));
        const int dj = std::abs(g.row(nodes[k]) - g.row(nodes[k - 1]));
        if (di + dj == 1) {
            ++orth;
        } else if (di == 1 && dj == 1) {
            ++diag;
        } else {
            throw Error(ErrorCode::InvalidArgument, "nodes are not lattice neighbours");
        }
    }
    return g.resolution * (static_cast<double>(orth) + std::numbers::sqrt2 * static_cast<double>(diag));
}

} // namespace quav::baselines
