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
#include "quav/graphplan/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quav/error.hpp"

namespace quav::graphplan {

int Grid::nearest_node(const Point2 &p) const {
    // Round-half-down keeps ties on the lower index.
    auto snap = [this](double offset, int count) {
        const double t = offset / resolution;
        int k = static_cast<int>(std::ceil(t - 0.5));
        return std::clamp(k, 0, count - 1);
    };
    return index(snap(p.x - origin.x, nx), snap(p.y - origin.y, ny));
}

Grid build_grid(const Point2 &start, const Point2 &end, double resolution,
                double margin) {
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
        throw Error(ErrorCode::InvalidArgument, "grid resolution must be > 0");
    }
    if (!(margin >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "grid margin must be >= 0");
    }
    if (start == end) {
        throw Error(ErrorCode::InvalidArgument, "start and end coincide");
    }

    Grid g;
    g.resolution = resolution;
    g.origin = {std::min(start.x, end.x) - margin, std::min(start.y, end.y) - margin};
    const double span_x = std::abs(end.x - start.x) + 2.0 * margin;
    const double span_y = std::abs(end.y - start.y) + 2.0 * margin;
    auto count = [resolution](double span) {
        const int steps = static_cast<int>(std::ceil(span / resolution - 1e-9));
        return std::max(2, steps + 1);
    };
    g.nx = count(span_x);
    g.ny = count(span_y);

    if (g.size() < 4) {
        throw Error(ErrorCode::ResolutionTooCoarse, "grid has fewer than 4 nodes");
    }
    g.start_node = g.nearest_node(start);
    g.end_node = g.nearest_node(end);
    if (g.start_node == g.end_node) {
        throw Error(ErrorCode::ResolutionTooCoarse,
                    "start and end snap to the same grid node");
    }
    return g;
}

int SearchGraph::add_node(const Point2 &p) {
    nodes_.push_back(p);
    adjacency_.emplace_back();
    return static_cast<int>(nodes_.size() - 1);
}

int SearchGraph::add_edge(int u, int v) {
    const int n = static_cast<int>(nodes_.size());
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "invalid edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    for (const auto &nb : adjacency_[static_cast<std::size_t>(u)]) {
        if (nb.node == v) {
            return nb.edge;
        }
    }
    const int e = static_cast<int>(edges_.size());
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    adjacency_[static_cast<std::size_t>(u)].push_back({v, e});
    adjacency_[static_cast<std::size_t>(v)].push_back({u, e});
    return e;
}

double SearchGraph::edge_length(int e) const {
    const auto &[u, v] = edges_[static_cast<std::size_t>(e)];
    return geo::distance(node(u), node(v));
}

bool SearchGraph::has_edge(int u, int v) const {
    const auto &adj = adjacency_[static_cast<std::size_t>(u)];
    return std::any_of(adj.begin(), adj.end(),
                       [v](const Neighbor &nb) { return nb.node == v; });
}

SearchGraph build_graph(const Grid &g, Connectivity connectivity) {
    return build_graph(g, connectivity, [](int, int) { return true; });
}

SearchGraph build_graph(const Grid &g, Connectivity connectivity,
                        const std::function<bool(int, int)> &edge_allowed) {
    SearchGraph graph(connectivity);
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        graph.add_node(g.node(static_cast<int>(idx)));
    }
    auto link = [&](int u, int i, int j) {
        if (i < 0 || i >= g.nx || j >= g.ny) {
            return;
        }
        const int v = g.index(i, j);
        if (edge_allowed(u, v)) {
            graph.add_edge(u, v);
        }
    };
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const int u = g.index(i, j);
            link(u, i + 1, j);
            link(u, i, j + 1);
            if (connectivity == Connectivity::Eight) {
                link(u, i + 1, j + 1);
                link(u, i - 1, j + 1);
            }
        }
    }
    return graph;
}

} // namespace quav::graphplan
