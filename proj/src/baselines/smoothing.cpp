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
#include "quav/baselines/smoothing.hpp"

namespace quav::baselines {

std::vector<Point2> shortcut_waypoints(const std::vector<Point2> &pts, const Environment &env) {
    if (pts.size() < 3) {
        return pts;
    }
    std::vector<Point2> out{pts.front()};
    std::size_t i = 0;
    while (i + 1 < pts.size()) {
        std::size_t next = i + 1;
        for (std::size_t j = pts.size() - 1; j > i + 1; --j) {
            if (env.segment_clear({pts[i], pts[j]})) {
                next = j;
                break;
            }
        }
        out.push_back(pts[next]);
        i = next;
    }
    return out;
}

std::vector<Point2> smooth_waypoints(const std::vector<Point2> &pts, const Environment &env,
                                     double factor, int passes) {
    if (factor <= 0.0 || pts.size() < 3) {
        return pts;
    }
    std::vector<Point2> p = shortcut_waypoints(pts, env);
    for (int pass = 0; pass < passes; ++pass) {
        for (std::size_t k = 1; k + 1 < p.size(); ++k) {
            const Point2 mid = (p[k - 1] + p[k + 1]) * 0.5;
            const Point2 cand = p[k] + (mid - p[k]) * factor;
            if (env.segment_clear({p[k - 1], cand}) && env.segment_clear({cand, p[k + 1]})) {
                p[k] = cand;
            }
        }
    }
    return shortcut_waypoints(p, env);
}

graphplan::CandidatePath smooth_path(const graphplan::CandidatePath &p, const Environment &env,
                                     double factor) {
    graphplan::CandidatePath out;
    out.waypoints = smooth_waypoints(p.waypoints, env, factor);
    out.length = graphplan::path_length(out.waypoints);
    out.angular_deviation = graphplan::angular_deviation(out.waypoints);
    return out;
}

} // namespace quav::baselines
