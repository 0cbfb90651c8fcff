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
#include "quav/baselines/rrt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "quav/error.hpp"
#include "quav/random.hpp"

namespace quav::baselines {

void RrtConfig::validate() const {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw Error(ErrorCode::InvalidArgument, "rrt step must be > 0");
    }
    if (max_iterations < 1) {
        throw Error(ErrorCode::InvalidArgument, "rrt max_iterations must be >= 1");
    }
    if (!(goal_bias >= 0.0 && goal_bias <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "rrt goal_bias must be in [0, 1]");
    }
}

namespace {

graphplan::CandidatePath trace_back(const RrtTree &tree, int leaf) {
    graphplan::CandidatePath path;
    for (int v = leaf; v != -1; v = tree.parent[static_cast<std::size_t>(v)]) {
        path.nodes.push_back(v);
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    for (int v : path.nodes) {
        path.waypoints.push_back(tree.nodes[static_cast<std::size_t>(v)]);
    }
    path.length = graphplan::path_length(path.waypoints);
    path.angular_deviation = graphplan::angular_deviation(path.waypoints);
    return path;
}

} // namespace

RrtResult rrt_search(const Point2 &start, const Point2 &end, const Environment &env,
                     const RrtConfig &cfg) {
    cfg.validate();
    if (!env.point_clear(start)) {
        throw Error(ErrorCode::StartInObstacle, "start lies inside an obstacle buffer");
    }
    if (!env.point_clear(end)) {
        throw Error(ErrorCode::EndInObstacle, "end lies inside an obstacle buffer");
    }
    RrtResult out;
    RrtTree &tree = out.tree;
    tree.nodes.push_back(start);
    tree.parent.push_back(-1);

    auto try_goal = [&](int node) {
        const Point2 &p = tree.nodes[static_cast<std::size_t>(node)];
        if (geo::distance(p, end) <= cfg.step && env.segment_clear({p, end})) {
            if (geo::distance(p, end) > 0.0) {
                tree.nodes.push_back(end);
                tree.parent.push_back(node);
            }
            return true;
        }
        return false;
    };
    if (try_goal(0)) {
        out.path = trace_back(tree, static_cast<int>(tree.nodes.size() - 1));
        return out;
    }

    Rng rng(cfg.seed);
    const auto &b = env.bounds;
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        out.iterations = it;
        Point2 sample = end;
        if (rng.uniform() >= cfg.goal_bias) {
            sample = {rng.uniform(b.min.x, b.max.x), rng.uniform(b.min.y, b.max.y)};
        }
        int nearest = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
            const double d = geo::distance(tree.nodes[i], sample);
            if (d < best) {
                best = d;
                nearest = static_cast<int>(i);
            }
        }
        if (best < 1e-12) {
            continue;
        }
        const Point2 from = tree.nodes[static_cast<std::size_t>(nearest)];
        const Point2 to = from + (sample - from) * (std::min(cfg.step, best) / best);
        if (!env.segment_clear({from, to})) {
            continue;
        }
        tree.nodes.push_back(to);
        tree.parent.push_back(nearest);
        const int added = static_cast<int>(tree.nodes.size() - 1);
        if (try_goal(added)) {
            out.path = trace_back(tree, static_cast<int>(tree.nodes.size() - 1));
            return out;
        }
    }
    throw Error(ErrorCode::MaxIterationsExceeded,
                "no path after " + std::to_string(cfg.max_iterations) + " iterations (" +
                    std::to_string(tree.nodes.size()) + " tree nodes)");
}

graphplan::CandidatePath rrt_plan(const Point2 &start, const Point2 &end, const Environment &env,
                                  const RrtConfig &cfg) {
    return rrt_search(start, end, env, cfg).path;
}

} // namespace quav::baselines
