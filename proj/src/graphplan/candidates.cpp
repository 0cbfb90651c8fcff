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
#include "quav/graphplan/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>

#include "quav/error.hpp"

namespace quav::graphplan {

namespace {

// Lengths compare on a micrometer lattice so that equal-length lattice
// paths summed in different orders still tie and fall back to node order.
std::int64_t length_key(double length) { return std::llround(length * 1e6); }

struct Ranked {
    std::int64_t key;
    std::vector<int> nodes;
};

bool ranked_less(const Ranked &a, const Ranked &b) {
    if (a.key != b.key) {
        return a.key < b.key;
    }
    return a.nodes < b.nodes;
}

struct RankedWorstFirst {
    bool operator()(const Ranked &a, const Ranked &b) const { return ranked_less(a, b); }
};

bool connected(const SearchGraph &g, int start, int end) {
    std::vector<char> seen(g.node_count(), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        if (u == end) {
            return true;
        }
        for (const auto &nb : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(nb.node)]) {
                seen[static_cast<std::size_t>(nb.node)] = 1;
                stack.push_back(nb.node);
            }
        }
    }
    return false;
}

class Enumerator {
  public:
    Enumerator(const SearchGraph &g, int start, int end, const EnumerationOptions &opts)
        : g_(g), end_(end), opts_(opts), on_path_(g.node_count(), 0) {
        const Point2 axis = g.node(end) - g.node(start);
        const double len = geo::norm(axis);
        axis_ = {axis.x / len, axis.y / len};
        origin_ = g.node(start);
        double extent = 0.0;
        for (const auto &p : g.nodes()) {
            extent = std::max(extent, geo::norm(p - origin_));
        }
        tolerance_ = 1e-9 * std::max(1.0, extent);
        path_.push_back(start);
        on_path_[static_cast<std::size_t>(start)] = 1;
    }

    std::vector<Ranked> run() {
        dfs(path_.front(), 0.0);
        std::vector<Ranked> out;
        while (!best_.empty()) {
            out.push_back(best_.top());
            best_.pop();
        }
        std::sort(out.begin(), out.end(), ranked_less);
        return out;
    }

  private:
    double progress(int u) const { return geo::dot(g_.node(u) - origin_, axis_); }

    void dfs(int u, double length) {
        if (u == end_) {
            offer(length);
            return;
        }
        if (best_.size() >= opts_.max_paths && opts_.max_paths > 0) {
            const double lower = length + geo::distance(g_.node(u), g_.node(end_));
            if (length_key(lower) > best_.top().key) {
                return;
            }
        }
        const double here = progress(u);
        for (const auto &nb : g_.neighbors(u)) {
            const auto v = static_cast<std::size_t>(nb.node);
            if (on_path_[v]) {
                continue;
            }
            if (opts_.monotone && progress(nb.node) < here - tolerance_) {
                continue;
            }
            on_path_[v] = 1;
            path_.push_back(nb.node);
            dfs(nb.node, length + g_.edge_length(nb.edge));
            path_.pop_back();
            on_path_[v] = 0;
        }
    }

    void offer(double length) {
        if (opts_.max_paths == 0) {
            return;
        }
        Ranked r{length_key(length), path_};
        if (best_.size() < opts_.max_paths) {
            best_.push(std::move(r));
        } else if (ranked_less(r, best_.top())) {
            best_.pop();
            best_.push(std::move(r));
        }
    }

    const SearchGraph &g_;
    int end_;
    EnumerationOptions opts_;
    Point2 axis_;
    Point2 origin_;
    double tolerance_{0.0};
    std::vector<char> on_path_;
    std::vector<int> path_;
    std::priority_queue<Ranked, std::vector<Ranked>, RankedWorstFirst> best_;
};

} // namespace

double path_length(std::span<const Point2> waypoints) {
    double total = 0.0;
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        total += geo::distance(waypoints[i - 1], waypoints[i]);
    }
    return total;
}

double angular_deviation(std::span<const Point2> waypoints) {
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        if (waypoints[i] == waypoints[i - 1]) {
            throw Error(ErrorCode::DegenerateStep,
                        "zero-length step at waypoint " + std::to_string(i));
        }
    }
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < waypoints.size(); ++i) {
        const Point2 d0 = waypoints[i] - waypoints[i - 1];
        const Point2 d1 = waypoints[i + 1] - waypoints[i];
        total += std::abs(std::atan2(geo::cross(d0, d1), geo::dot(d0, d1)));
    }
    return total;
}

CandidatePath make_candidate(const SearchGraph &g, std::vector<int> nodes) {
    CandidatePath p;
    p.waypoints.reserve(nodes.size());
    for (int u : nodes) {
        p.waypoints.push_back(g.node(u));
    }
    p.nodes = std::move(nodes);
    p.length = path_length(p.waypoints);
    p.angular_deviation = angular_deviation(p.waypoints);
    return p;
}

std::vector<CandidatePath> enumerate_candidate_paths(const SearchGraph &g, int start,
                                                     int end,
                                                     const EnumerationOptions &opts) {
    const int n = static_cast<int>(g.node_count());
    if (start < 0 || end < 0 || start >= n || end >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "start/end not graph nodes");
    }
    if (start == end) {
        return {make_candidate(g, {start})};
    }
    if (!connected(g, start, end)) {
        throw Error(ErrorCode::NoPathExists, "start and end are disconnected");
    }
    auto ranked = Enumerator(g, start, end, opts).run();
    if (ranked.empty() && opts.max_paths > 0) {
        throw Error(ErrorCode::NoPathExists, "no monotone path from start to end");
    }
    std::vector<CandidatePath> out;
    out.reserve(ranked.size());
    for (auto &r : ranked) {
        out.push_back(make_candidate(g, std::move(r.nodes)));
    }
    return out;
}

} // namespace quav::graphplan
