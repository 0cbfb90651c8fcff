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
#include "quav/harness/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "quav/baselines/astar.hpp"
#include "quav/baselines/dijkstra.hpp"
#include "quav/baselines/rrt.hpp"
#include "quav/baselines/smoothing.hpp"
#include "quav/error.hpp"
#include "quav/graphplan/candidates.hpp"
#include "quav/qaoa/decode.hpp"
#include "quav/qaoa/encoding.hpp"
#include "quav/qaoa/evolution.hpp"
#include "quav/qsim/sampling.hpp"

namespace quav::harness {

using geo::Point2;

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
auto stage(const char *name, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error &e) {
        throw Error(e.code(), std::string(name) + " stage: " + e.detail());
    }
}

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// SplitMix64 finalizer, used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

void finish(PlanResult &r, const Scenario &s, Clock::time_point t0) {
    const auto m = evaluate_path(r.path, s.obstacles, s.cost.buffer_distance);
    r.length = m.length;
    r.feasible = m.feasible;
    r.buffer_violations = m.buffer_violations;
    r.path_geo.clear();
    for (const auto &p : r.path) {
        r.path_geo.push_back(s.to_geo(p));
    }
    if (!r.feasible) {
        r.diagnostic = "final path intersects an obstacle";
    } else if (r.buffer_violations > 0) {
        r.diagnostic = std::to_string(r.buffer_violations) + " segment(s) inside the buffer";
    }
    r.wall_ms = elapsed_ms(t0);
}

struct Leg {
    Point2 a;
    Point2 b;
    bool usable;
};

// Straight legs as decoded, with excluded or unsafe legs marked unusable.
std::vector<Leg> decoded_legs(const qaoa::EncodedProblem &enc, const qaoa::DecodedPath &d,
                              const baselines::Environment &env) {
    std::vector<Leg> legs;
    if (enc.mode == qaoa::EncodingMode::Segment) {
        for (std::size_t i = 0; i < enc.edges.size(); ++i) {
            const bool included = ((d.bits >> i) & 1U) != 0;
            const auto &e = enc.edges[i];
            legs.push_back({e.a, e.b, included && env.segment_clear(e)});
        }
        return legs;
    }
    for (std::size_t k = 0; k + 1 < d.waypoints.size(); ++k) {
        const geo::Segment e{d.waypoints[k], d.waypoints[k + 1]};
        legs.push_back({e.a, e.b, env.segment_clear(e)});
    }
    const Point2 last = d.waypoints.empty() ? enc.start : d.waypoints.back();
    if (last != enc.end) {
        legs.push_back({last, enc.end, env.segment_clear({last, enc.end})});
    }
    return legs;
}

std::vector<Point2> repair(const std::vector<Leg> &legs, const baselines::Environment &env,
                           const Scenario &s, int &runs) {
    std::vector<Point2> out{legs.front().a};
    auto push = [&out](const Point2 &p) {
        if (out.back() != p) {
            out.push_back(p);
        }
    };
    runs = 0;
    for (std::size_t i = 0; i < legs.size();) {
        if (legs[i].usable) {
            push(legs[i].b);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < legs.size() && !legs[j].usable) {
            ++j;
        }
        ++runs;
        auto detour = baselines::route_between(env, legs[i].a, legs[j - 1].b, s.astar.resolution);
        detour = baselines::smooth_waypoints(detour, env, s.astar.smoothing);
        for (std::size_t k = 1; k < detour.size(); ++k) {
            push(detour[k]);
        }
        i = j;
    }
    return out;
}

} // namespace

std::string_view to_string(Planner p) {
    switch (p) {
    case Planner::Quav:
        return "quav";
    case Planner::AStar:
        return "astar";
    case Planner::Rrt:
        return "rrt";
    }
    return "unknown";
}

Planner parse_planner(std::string_view name) {
    for (Planner p : {Planner::Quav, Planner::AStar, Planner::Rrt}) {
        if (name == to_string(p)) {
            return p;
        }
    }
    throw Error(ErrorCode::InvalidArgument,
                "unknown planner '" + std::string(name) + "' (expected quav, astar or rrt)");
}

PathMetrics evaluate_path(std::span<const Point2> path,
                          std::span<const geo::ObstaclePolygon> obstacles, double clearance) {
    PathMetrics m;
    m.feasible = path.size() >= 2;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const geo::Segment seg{path[k], path[k + 1]};
        m.length += seg.length();
        bool violates = false;
        for (const auto &o : obstacles) {
            if (geo::segment_intersects(seg, o)) {
                m.feasible = false;
                violates = true;
            } else if (geo::segment_polygon_distance(seg, o) < clearance) {
                violates = true;
            }
        }
        m.buffer_violations += violates ? 1 : 0;
    }
    return m;
}

PlanResult run_quav(const Scenario &s, std::uint64_t seed) {
    const auto t0 = Clock::now();
    PlanResult r;
    r.planner = Planner::Quav;
    r.scenario = s.name;
    r.seed = seed;
    const auto &q = s.qaoa;

    auto env = stage("preprocess", [&] { return s.environment(); });
    const auto enc = stage("encode", [&] {
        return q.encoding == qaoa::EncodingMode::Segment
                   ? qaoa::encode_segment(s.start, s.end, q.qubits, s.obstacles, s.cost, q.coupling)
                   : qaoa::encode_select(s.start, s.end, q.qubits, s.obstacles, s.cost,
                                         q.coupling);
    });

    const qaoa::Evolution ev = stage("simulate", [&] { return qaoa::Evolution(enc.problem); });
    const auto opt = stage("optimize", [&] {
        qaoa::OptimizeOptions opts;
        opts.layers = q.layers;
        opts.steps = q.steps;
        opts.learning_rate = q.learning_rate;
        opts.seed = seed;
        if (q.shot_loss) {
            opts.shots = q.shots;
            opts.gradient = qaoa::GradientMethod::ParameterShift;
        }
        return qaoa::optimize(ev, opts);
    });
    r.trace = opt.trace;
    r.params = opt.best_params;
    r.ground_energy = ev.ground_energy();

    const auto samples = stage("sample", [&] {
        return qsim::sample_bitstrings(ev.state(opt.best_params), q.shots, mix_seed(seed));
    });
    const auto decoded = stage("decode", [&] {
        try {
            return qaoa::decode_path(enc, samples);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::NoFeasibleSample) {
                throw;
            }
            return qaoa::decode_bitstring(enc, qaoa::rank_samples(enc.problem, samples).front().bits);
        }
    });
    r.bitstring = decoded.bitstring;
    r.decoded_feasible = decoded.feasible;

    r.path = stage("repair", [&] {
        const auto legs = decoded_legs(enc, decoded, env);
        std::vector<Point2> pts;
        for (const auto &l : legs) {
            pts.push_back(l.a);
            pts.push_back(l.b);
        }
        const auto box = geo::bounds_of(pts).expanded(s.bounds_margin);
        env.bounds.min = {std::min(env.bounds.min.x, box.min.x), std::min(env.bounds.min.y, box.min.y)};
        env.bounds.max = {std::max(env.bounds.max.x, box.max.x), std::max(env.bounds.max.y, box.max.y)};
        return repair(legs, env, s, r.repaired_runs);
    });
    finish(r, s, t0);
    return r;
}

PlanResult run_astar(const Scenario &s) {
    const auto t0 = Clock::now();
    PlanResult r;
    r.planner = Planner::AStar;
    r.scenario = s.name;
    const auto env = stage("preprocess", [&] { return s.environment(); });
    r.path = stage("search", [&] { return baselines::astar_plan(s.start, s.end, env, s.astar); })
                 .waypoints;
    finish(r, s, t0);
    return r;
}

PlanResult run_rrt(const Scenario &s, std::uint64_t seed) {
    const auto t0 = Clock::now();
    PlanResult r;
    r.planner = Planner::Rrt;
    r.scenario = s.name;
    r.seed = seed;
    const auto env = stage("preprocess", [&] { return s.environment(); });
    const baselines::RrtConfig cfg{s.rrt.step, s.rrt.max_iterations, s.rrt.goal_bias, seed};
    r.path = stage("search", [&] { return baselines::rrt_plan(s.start, s.end, env, cfg); })
                 .waypoints;
    finish(r, s, t0);
    return r;
}

PlanResult run_planner(Planner p, const Scenario &s, std::uint64_t seed) {
    switch (p) {
    case Planner::Quav:
        return run_quav(s, seed);
    case Planner::AStar: {
        auto r = run_astar(s);
        r.seed = seed;
        return r;
    }
    case Planner::Rrt:
        return run_rrt(s, seed);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown planner");
}

} // namespace quav::harness
