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
 * Regular planning grid and the search graph built over it.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "quav/geo/point.hpp"

namespace quav::graphplan {

using geo::Point2;

/**
 * @brief Regular lattice x_i = x0 + i r, y_j = y0 + j r.
 *
 * Node index is j * nx + i. start_node and end_node hold the snapped
 * endpoints when the grid was built by build_grid, otherwise -1.
 */
struct Grid {
    Point2 origin;
    double resolution{1.0};
    int nx{0};
    int ny{0};
    int start_node{-1};
    int end_node{-1};

    [[nodiscard]] std::size_t size() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    }
    [[nodiscard]] int index(int i, int j) const { return j * nx + i; }
    [[nodiscard]] int column(int idx) const { return idx % nx; }
    [[nodiscard]] int row(int idx) const { return idx / nx; }
    [[nodiscard]] Point2 node(int idx) const {
        return {origin.x + column(idx) * resolution, origin.y + row(idx) * resolution};
    }
    /// Nearest node; ties resolve to the lowest index.
    [[nodiscard]] int nearest_node(const Point2 &p) const;
};

/**
 * @brief Grid spanning the bounding box of {start, end} grown by margin.
 *
 * Each axis has at least two nodes.
 * @throws Error(InvalidArgument) for r <= 0, negative margin or start == end;
 * Error(ResolutionTooCoarse) if the grid has fewer than 4 nodes or start and
 * end snap to the same node.
 */
Grid build_grid(const Point2 &start, const Point2 &end, double resolution,
                double margin);

enum class Connectivity { Four, Eight };

/// Undirected graph with Euclidean edge weights.
class SearchGraph {
  public:
    struct Neighbor {
        int node;
        int edge;
    };

    explicit SearchGraph(Connectivity connectivity = Connectivity::Eight)
        : connectivity_(connectivity) {}

    int add_node(const Point2 &p);
    /// Adds u-v once; returns the edge index (existing index for duplicates).
    int add_edge(int u, int v);

    [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const Point2 &node(int i) const {
        return nodes_[static_cast<std::size_t>(i)];
    }
    [[nodiscard]] const std::vector<Point2> &nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<std::pair<int, int>> &edges() const {
        return edges_;
    }
    [[nodiscard]] const std::vector<Neighbor> &neighbors(int u) const {
        return adjacency_[static_cast<std::size_t>(u)];
    }
    [[nodiscard]] double edge_length(int e) const;
    [[nodiscard]] bool has_edge(int u, int v) const;
    [[nodiscard]] Connectivity connectivity() const { return connectivity_; }

  private:
    Connectivity connectivity_;
    std::vector<Point2> nodes_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

/// 4- or 8-neighbor graph over every grid node, in grid index order.
SearchGraph build_graph(const Grid &g, Connectivity connectivity);

/// As above, keeping only edges accepted by @p edge_allowed(u, v).
SearchGraph build_graph(const Grid &g, Connectivity connectivity,
                        const std::function<bool(int, int)> &edge_allowed);

} // namespace quav::graphplan
