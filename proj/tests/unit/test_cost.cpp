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
#include <doctest.h>

#include <cmath>
#include <random>

#include "quav/cost/cost.hpp"
#include "quav/error.hpp"
#include "quav/graphplan/segmentation.hpp"

using namespace quav;
using namespace quav::cost;
using geo::ObstaclePolygon;
using geo::Point2;
using geo::Segment;

namespace {

ObstaclePolygon box(double x0, double y0, double x1, double y1) {
    return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

} // namespace

TEST_CASE("distance cost is the Euclidean length") {
    CHECK(distance_cost({{0, 0}, {3, 4}}) == 5.0);
}

TEST_CASE("obstacle penalty cases") {
    CostConfig cfg;
    const std::vector<ObstaclePolygon> obs{box(0, 0, 1, 1)};
    CHECK(obstacle_penalty({{-1, 0.5}, {2, 0.5}}, obs, cfg) == 1e6);
    CHECK(obstacle_penalty({{-1, 0.5}, {2, 0.5}}, {}, cfg) == 0.0);
    const double ds = cfg.buffer_distance;
    const Segment at_ds{{-1, 1 + ds}, {2, 1 + ds}};
    CHECK(obstacle_penalty(at_ds, obs, cfg) == doctest::Approx(cfg.lambda * std::exp(-1.0)));
    CHECK(obstacle_penalty(at_ds, obs, cfg) == doctest::Approx(0.3679 * cfg.lambda).epsilon(1e-4));
}

TEST_CASE("obstacle-free straight path: start bias on edge 0") {
    const auto seg = graphplan::segment_straight_path({0, 0}, {100, 0}, 20);
    const auto a = assign_costs(seg.edges, {}, CostConfig{});
    REQUIRE(a.costs.size() == 20);
    CHECK(a.costs.raw[0] == doctest::Approx(-1000.0 + 5.0));
    for (std::size_t i = 1; i < 20; ++i) {
        CHECK(a.costs.raw[i] == doctest::Approx(5.0));
    }
    double max_abs = 0.0;
    for (double c : a.costs.normalized) {
        max_abs = std::max(max_abs, std::abs(c));
    }
    CHECK(max_abs == 1.0);
    CHECK(a.costs.normalized[0] == -1.0);
}

TEST_CASE("single edge through an obstacle costs the hard penalty") {
    const std::vector<Segment> edges{{{-5, 0.5}, {5, 0.5}}};
    const auto a = assign_costs(edges, std::vector{box(-1, 0, 1, 1)}, CostConfig{});
    REQUIRE(a.costs.size() == 1);
    CHECK(a.costs.raw[0] == 1e6);
    CHECK(a.edges[0].intersects);
    CHECK(a.edges[0].buffer_violation);
    CHECK(a.edges[0].clearance == 0.0);
}

TEST_CASE("start bias is skipped on an intersecting start edge") {
    const auto seg = graphplan::segment_straight_path({0, 0}, {40, 0}, 4);
    const auto a = assign_costs(seg.edges, std::vector{box(2, -1, 4, 1)}, CostConfig{});
    CHECK(a.costs.raw[0] == 1e6);
}

TEST_CASE("empty edge list is rejected") {
    try {
        (void)assign_costs(std::vector<Segment>{}, {}, CostConfig{});
        FAIL("expected EmptyPath");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::EmptyPath);
    }
}

TEST_CASE("normalization is scale invariant and preserves order") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    std::vector<double> raw(15);
    for (auto &c : raw) {
        c = u(rng);
    }
    const auto a = normalize(raw);
    std::vector<double> scaled = raw;
    for (auto &c : scaled) {
        c *= 37.5;
    }
    const auto b = normalize(scaled);
    double max_abs = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        CHECK(a.normalized[i] == doctest::Approx(b.normalized[i]).epsilon(1e-15));
        max_abs = std::max(max_abs, std::abs(a.normalized[i]));
    }
    CHECK(max_abs == 1.0);
    const auto amin = std::min_element(raw.begin(), raw.end()) - raw.begin();
    const auto nmin = std::min_element(a.normalized.begin(), a.normalized.end()) - a.normalized.begin();
    CHECK(amin == nmin);
    const auto zero = normalize({0.0, 0.0});
    CHECK(zero.scale == 1.0);
    CHECK(zero.normalized[0] == 0.0);
}

TEST_CASE("cost is monotone in clearance and intersecting edges dominate") {
    const CostConfig cfg{1e6, -1e3, 5.0, 1e3, 0.0};
    const std::vector<ObstaclePolygon> obs{box(0, 0, 10, 10)};
    double previous = -1.0;
    for (double y = 60.0; y > 10.0; y -= 0.5) {
        const std::vector<Segment> edges{{{-100, y}, {-90, y}}, {{-5, y}, {15, y}}};
        const auto a = assign_costs(edges, obs, cfg);
        CHECK(a.costs.raw[1] >= previous);
        previous = a.costs.raw[1];
    }
    // Longest edge allowed well below the penalty, closest possible approach.
    const std::vector<Segment> edges{{{-5, 5}, {15, 5}}, {{20, 10.0 + 1e-9}, {20 + 9.9e4, 10.0 + 1e-9}}};
    const auto a = assign_costs(edges, obs, cfg);
    CHECK(a.costs.raw[0] > a.costs.raw[1]);
}

TEST_CASE("identical inputs give bit-identical vectors") {
    const auto seg = graphplan::segment_straight_path({0, 0}, {73, 19}, 20);
    const std::vector<ObstaclePolygon> obs{box(30, 0, 40, 20), box(50, -10, 55, 5)};
    const auto a = assign_costs(seg.edges, obs, CostConfig{});
    const auto b = assign_costs(seg.edges, obs, CostConfig{});
    CHECK(a.costs.raw == b.costs.raw);
    CHECK(a.costs.normalized == b.costs.normalized);
}

TEST_CASE("buffer violations flag edges inside the clearance") {
    const std::vector<Segment> edges{{{0, 3}, {10, 3}}, {{0, 8}, {10, 8}}};
    const auto a = assign_costs(edges, std::vector{box(0, -1, 10, 0)}, CostConfig{});
    CHECK(a.edges[0].buffer_violation);
    CHECK_FALSE(a.edges[0].intersects);
    CHECK(a.edges[0].clearance == doctest::Approx(3.0));
    CHECK_FALSE(a.edges[1].buffer_violation);
}

TEST_CASE("smoothness weight penalizes turns") {
    const std::vector<Segment> edges{{{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}};
    CostConfig cfg;
    cfg.smoothness_weight = 2.0;
    cfg.start_bias = 0.0;
    const auto a = assign_costs(edges, {}, cfg);
    CHECK(a.costs.raw[1] == doctest::Approx(1.0 + 2.0 * std::acos(0.0)));
}

TEST_CASE("config validation") {
    CostConfig cfg;
    cfg.buffer_distance = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = CostConfig{};
    cfg.lambda = -1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}
