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
#include "quav/baselines/astar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include "quav/baselines/smoothing.hpp"
#include "quav/error.hpp"

namespace quav::baselines {

using graphplan::CandidatePath;

void AStarConfig::validate() const {
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
        throw Error(ErrorCode::InvalidArgument, "astar resolution must be > 0");
    }
    if (!(smoothing >= 0.0 && smoothing <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "astar smoothing must be in [0, 1]");
    }
}

namespace {

constexpr int kDi[8] = {1, 0, -1, 0, 1, -1, -1, 1};
constexpr int kDj[8] = {0, 1, 0, -1, 1, 1, -1, -1};

struct SearchOutcome {
    std::vector<int> nodes;
    double cost{0.0};
};

// Multi-goal A*: goals carry the extra cost of the final hop to `target`.
SearchOutcome search(const ClearanceMap &map, int start,
                     const std::vector<std::pair<int, double>> &goals, const Point2 &target) {
    const auto &g = map.grid();
    const double r = g.resolution;
    const std::size_t n = g.size();
    std::vector<double> gcost(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n, -1);
    std::vector<double> tail(n, -1.0);
    std::vector<std::uint8_t> closed(n, 0);
    for (const auto &[node, d] : goals) {
        tail[static_cast<std::size_t>(node)] = d;
    }
    auto h = [&](int idx) { return geo::distance(g.node(idx), target); };

    using Item = std::tuple<double, double, int>; // f, h, node
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    gcost[static_cast<std::size_t>(start)] = 0.0;
    open.emplace(h(start), h(start), start);

    double best = std::numeric_limits<double>::infinity();
    int best_goal = -1;
    while (!open.empty()) {
        const auto [f, hu, u] = open.top();
        if (f >= best) {
            break;
        }
        open.pop();
        const auto ui = static_cast<std::size_t>(u);
        if (closed[ui] != 0) {
            continue;
        }
        closed[ui] = 1;
        if (tail[ui] >= 0.0 && gcost[ui] + tail[ui] < best) {
            best = gcost[ui] + tail[ui];
            best_goal = u;
        }
        const int ci = g.column(u);
        const int cj = g.row(u);
        for (int k = 0; k < 8; ++k) {
            const int i = ci + kDi[k];
            const int j = cj + kDj[k];
            if (i < 0 || j < 0 || i >= g.nx || j >= g.ny) {
                continue;
            }
            const int v = g.index(i, j);
            const auto vi = static_cast<std::size_t>(v);
            if (closed[vi] != 0 || !map.edge_free(u, v)) {
                continue;
            }
            const double step = k < 4 ? r : r * std::sqrt(2.0);
            const double ng = gcost[ui] + step;
            if (ng < gcost[vi]) {
                gcost[vi] = ng;
                parent[vi] = u;
                const double hv = h(v);
                open.emplace(ng + hv, hv, v);
            }
        }
    }
    if (best_goal < 0) {
        throw Error(ErrorCode::NoPathExists, "A* exhausted the reachable grid");
    }
    SearchOutcome out;
    for (int v = best_goal; v != -1; v = parent[static_cast<std::size_t>(v)]) {
        out.nodes.push_back(v);
    }
    std::reverse(out.nodes.begin(), out.nodes.end());
    out.cost = best;
    return out;
}

} // namespace

CandidatePath astar_search(const ClearanceMap &map, int start, int goal) {
    const auto &g = map.grid();
    if (start < 0 || goal < 0 || static_cast<std::size_t>(start) >= g.size() ||
        static_cast<std::size_t>(goal) >= g.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "A* endpoint outside the grid");
    }
    if (!map.node_free(start) || !map.node_free(goal)) {
        throw Error(ErrorCode::NoPathExists, "A* endpoint is not a free node");
    }
    auto found = search(map, start, {{goal, 0.0}}, g.node(goal));
    CandidatePath path;
    path.nodes = std::move(found.nodes);
    for (int v : path.nodes) {
        path.waypoints.push_back(g.node(v));
    }
    path.length = lattice_length(g, path.nodes);
    path.angular_deviation = graphplan::angular_deviation(path.waypoints);
    return path;
}

CandidatePath astar_plan(const Point2 &start, const Point2 &end, const Environment &env,
                         const AStarConfig &cfg) {
    cfg.validate();
    if (!env.point_clear(start)) {
        throw Error(ErrorCode::StartInObstacle, "start lies inside an obstacle buffer");
    }
    if (!env.point_clear(end)) {
        throw Error(ErrorCode::EndInObstacle, "end lies inside an obstacle buffer");
    }
    const ClearanceMap map(env, env.bounds, start, cfg.resolution);
    const int s = map.grid().start_node;
    const auto goals = map.attach(end);
    if (goals.empty()) {
        throw Error(ErrorCode::NoPathExists, "no free grid node reaches the end point");
    }
    auto found = search(map, s, goals, end);

    CandidatePath path;
    path.nodes = found.nodes;
    for (int v : path.nodes) {
        path.waypoints.push_back(map.grid().node(v));
    }
    path.waypoints.front() = start;
    if (geo::distance(path.waypoints.back(), end) > 1e-9) {
        path.waypoints.push_back(end);
    } else {
        path.waypoints.back() = end;
    }
    if (path.waypoints.size() == 1) {
        path.waypoints.push_back(end);
    }
    if (cfg.smoothing > 0.0) {
        path.waypoints = smooth_waypoints(path.waypoints, env, cfg.smoothing);
    }
    path.length = graphplan::path_length(path.waypoints);
    path.angular_deviation = graphplan::angular_deviation(path.waypoints);
    return path;
}

} // namespace quav::baselines
