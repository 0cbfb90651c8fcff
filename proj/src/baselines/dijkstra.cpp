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
#include "quav/baselines/dijkstra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>

#include "quav/error.hpp"

namespace quav::baselines {

using graphplan::CandidatePath;
using graphplan::SearchGraph;

CandidatePath dijkstra_oracle(const SearchGraph &g, int start, int end) {
    const int n = static_cast<int>(g.node_count());
    if (start < 0 || start >= n || end < 0 || end >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "dijkstra endpoint outside the graph");
    }
    std::vector<double> dist(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    dist[static_cast<std::size_t>(start)] = 0.0;
    open.emplace(0.0, start);
    while (!open.empty()) {
        const auto [d, u] = open.top();
        open.pop();
        if (d > dist[static_cast<std::size_t>(u)]) {
            continue;
        }
        if (u == end) {
            break;
        }
        for (const auto &nb : g.neighbors(u)) {
            const double nd = d + g.edge_length(nb.edge);
            if (nd < dist[static_cast<std::size_t>(nb.node)]) {
                dist[static_cast<std::size_t>(nb.node)] = nd;
                prev[static_cast<std::size_t>(nb.node)] = u;
                open.emplace(nd, nb.node);
            }
        }
    }
    if (std::isinf(dist[static_cast<std::size_t>(end)])) {
        throw Error(ErrorCode::NoPathExists,
                    "no path from node " + std::to_string(start) + " to " + std::to_string(end));
    }
    std::vector<int> nodes;
    for (int v = end; v != -1; v = prev[static_cast<std::size_t>(v)]) {
        nodes.push_back(v);
    }
    std::reverse(nodes.begin(), nodes.end());
    auto path = graphplan::make_candidate(g, std::move(nodes));
    path.length = dist[static_cast<std::size_t>(end)];
    return path;
}

SearchGraph clearance_graph(const ClearanceMap &map) {
    return graphplan::build_graph(map.grid(), graphplan::Connectivity::Eight,
                                  [&map](int u, int v) { return map.edge_free(u, v); });
}

std::vector<Point2> route_between(const Environment &env, const Point2 &a, const Point2 &b,
                                  double resolution) {
    if (!env.point_clear(a) || !env.point_clear(b)) {
        throw Error(ErrorCode::NoPathExists, "route endpoint is not clear");
    }
    if (env.segment_clear({a, b})) {
        return {a, b};
    }
    const geo::Bounds pair_box = geo::bounds_of(std::vector<Point2>{a, b});
    for (double margin = 10.0;; margin *= 2.0) {
        geo::Bounds window = pair_box.expanded(margin);
        const bool covers = window.min.x <= env.bounds.min.x && window.min.y <= env.bounds.min.y &&
                            window.max.x >= env.bounds.max.x && window.max.y >= env.bounds.max.y;
        window.min = {std::max(window.min.x, env.bounds.min.x),
                      std::max(window.min.y, env.bounds.min.y)};
        window.max = {std::min(window.max.x, env.bounds.max.x),
                      std::min(window.max.y, env.bounds.max.y)};
        const ClearanceMap map(env, window, a, resolution);
        SearchGraph g = clearance_graph(map);

        auto terminal = [&](const Point2 &p) {
            const auto links = map.attach(p);
            if (links.size() == 1 && links[0].second == 0.0) {
                return links[0].first;
            }
            const int id = g.add_node(p);
            for (const auto &[node, d] : links) {
                g.add_edge(id, node);
            }
            return id;
        };
        const int src = terminal(a);
        const int dst = terminal(b);
        try {
            auto path = dijkstra_oracle(g, src, dst);
            std::vector<Point2> pts = path.waypoints;
            pts.front() = a;
            pts.back() = b;
            return pts;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::NoPathExists || covers) {
                throw;
            }
        }
    }
}

} // namespace quav::baselines
