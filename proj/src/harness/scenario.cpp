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
#include "quav/harness/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "quav/error.hpp"
#include "harness/geojson_parse.hpp"

namespace quav::harness {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string &where, const std::string &what) {
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

[[noreturn]] void invalid(const std::string &what) { throw Error(ErrorCode::ValidationError, what); }

void check_keys(const json &obj, std::initializer_list<std::string_view> allowed,
                const std::string &where) {
    if (!obj.is_object()) {
        parse_fail(where, "expected an object");
    }
    std::vector<std::string> unknown;
    for (const auto &item : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            unknown.push_back(item.key());
        }
    }
    if (!unknown.empty()) {
        std::string list;
        for (const auto &k : unknown) {
            list += (list.empty() ? "" : ", ") + ("'" + k + "'");
        }
        parse_fail(where, "unknown key(s) " + list);
    }
}

double read_number(const json &obj, const char *key, double fallback, const std::string &where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number()) {
        parse_fail(where + "." + key, "expected a number");
    }
    return it->get<double>();
}

long long read_integer(const json &obj, const char *key, long long fallback,
                       const std::string &where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number_integer()) {
        parse_fail(where + "." + key, "expected an integer");
    }
    return it->get<long long>();
}

std::string read_string(const json &obj, const char *key, const std::string &fallback,
                        const std::string &where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_string()) {
        parse_fail(where + "." + key, "expected a string");
    }
    return it->get<std::string>();
}

geo::GeoPoint read_geopoint(const json &root, const char *key) {
    const auto it = root.find(key);
    if (it == root.end()) {
        parse_fail(key, "required field missing");
    }
    check_keys(*it, {"lat", "lon"}, key);
    if (!it->contains("lat") || !it->contains("lon")) {
        parse_fail(key, "needs both lat and lon");
    }
    return {read_number(*it, "lat", 0.0, key), read_number(*it, "lon", 0.0, key)};
}

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

} // namespace

baselines::Environment Scenario::environment() const {
    return baselines::make_environment(obstacles, cost.buffer_distance, start, end, bounds_margin);
}

geo::GeoPoint Scenario::to_geo(const geo::Point2 &p) const {
    return geo::unproject_from_utm({p.x, p.y, utm_zone, hemisphere});
}

void validate_scenario(const Scenario &s) {
    try {
        s.cost.validate();
        s.astar.validate();
        baselines::RrtConfig{s.rrt.step, s.rrt.max_iterations, s.rrt.goal_bias, 0}.validate();
    } catch (const Error &e) {
        invalid(e.detail());
    }
    const auto &q = s.qaoa;
    if (q.qubits < 1 || q.qubits > 24) {
        invalid("qaoa.qubits must be in 1..24");
    }
    if (q.layers < 1) {
        invalid("qaoa.layers must be >= 1");
    }
    if (q.steps < 1) {
        invalid("qaoa.steps must be >= 1");
    }
    if (!(q.learning_rate > 0.0)) {
        invalid("qaoa.learning_rate must be > 0");
    }
    if (q.shots < 1) {
        invalid("qaoa.shots must be >= 1");
    }
    if (!(q.coupling >= 0.0) || !std::isfinite(q.coupling)) {
        invalid("qaoa.coupling must be >= 0");
    }
    if (!(s.bounds_margin >= 0.0)) {
        invalid("bounds_margin must be >= 0");
    }
    if (s.start == s.end) {
        invalid("start and end coincide");
    }
    const double ds = s.cost.buffer_distance;
    for (const auto &[p, label] : {std::pair{s.start, "start"}, std::pair{s.end, "end"}}) {
        for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
            const double d = geo::point_polygon_distance(p, s.obstacles[i]);
            if (d == 0.0) {
                invalid(std::string(label) + " in obstacle " + std::to_string(i));
            }
            if (d < ds) {
                invalid(std::string(label) + " within buffer distance of obstacle " +
                        std::to_string(i));
            }
        }
    }
}

Scenario parse_scenario(std::string_view text, std::string_view fallback_name) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_of(text, e.byte > 0 ? e.byte - 1 : 0)) +
                        ": malformed JSON (" + e.what() + ")");
    }
    check_keys(root,
               {"name", "description", "utm_zone", "start", "end", "obstacles", "buffer_scale",
                "bounds_margin", "cost", "qaoa", "astar", "rrt"},
               "scenario");

    Scenario s;
    s.name = read_string(root, "name", std::string(fallback_name), "scenario");
    s.description = read_string(root, "description", "", "scenario");
    s.utm_zone = static_cast<int>(read_integer(root, "utm_zone", 49, "scenario"));
    s.start_geo = read_geopoint(root, "start");
    s.end_geo = read_geopoint(root, "end");
    s.bounds_margin = read_number(root, "bounds_margin", s.bounds_margin, "scenario");

    if (const auto it = root.find("buffer_scale"); it != root.end()) {
        check_keys(*it, {"sx", "sy"}, "buffer_scale");
        s.buffer_scale.sx = read_number(*it, "sx", 1.0, "buffer_scale");
        s.buffer_scale.sy = read_number(*it, "sy", 1.0, "buffer_scale");
    }
    if (const auto it = root.find("cost"); it != root.end()) {
        check_keys(*it,
                   {"obstacle_penalty", "start_bias", "buffer_distance", "lambda",
                    "smoothness_weight"},
                   "cost");
        auto &c = s.cost;
        c.obstacle_penalty = read_number(*it, "obstacle_penalty", c.obstacle_penalty, "cost");
        c.start_bias = read_number(*it, "start_bias", c.start_bias, "cost");
        c.buffer_distance = read_number(*it, "buffer_distance", c.buffer_distance, "cost");
        c.lambda = read_number(*it, "lambda", c.lambda, "cost");
        c.smoothness_weight = read_number(*it, "smoothness_weight", c.smoothness_weight, "cost");
    }
    if (const auto it = root.find("qaoa"); it != root.end()) {
        check_keys(*it,
                   {"qubits", "layers", "steps", "learning_rate", "shots", "seed", "encoding",
                    "coupling", "loss_mode"},
                   "qaoa");
        auto &q = s.qaoa;
        q.qubits = static_cast<int>(read_integer(*it, "qubits", q.qubits, "qaoa"));
        q.layers = static_cast<int>(read_integer(*it, "layers", q.layers, "qaoa"));
        q.steps = static_cast<int>(read_integer(*it, "steps", q.steps, "qaoa"));
        q.learning_rate = read_number(*it, "learning_rate", q.learning_rate, "qaoa");
        const long long shots = read_integer(*it, "shots", static_cast<long long>(q.shots), "qaoa");
        if (shots < 1) {
            invalid("qaoa.shots must be >= 1");
        }
        q.shots = static_cast<std::size_t>(shots);
        const long long seed = read_integer(*it, "seed", 0, "qaoa");
        if (seed < 0) {
            invalid("qaoa.seed must be >= 0");
        }
        q.seed = static_cast<std::uint64_t>(seed);
        q.coupling = read_number(*it, "coupling", q.coupling, "qaoa");
        try {
            q.encoding = qaoa::parse_encoding(read_string(*it, "encoding", "segment", "qaoa"));
        } catch (const Error &e) {
            parse_fail("qaoa.encoding", e.detail());
        }
        const std::string mode = read_string(*it, "loss_mode", "exact", "qaoa");
        if (mode != "exact" && mode != "shots") {
            parse_fail("qaoa.loss_mode", "expected 'exact' or 'shots'");
        }
        q.shot_loss = mode == "shots";
    }
    if (const auto it = root.find("astar"); it != root.end()) {
        check_keys(*it, {"resolution", "smoothing"}, "astar");
        s.astar.resolution = read_number(*it, "resolution", s.astar.resolution, "astar");
        s.astar.smoothing = read_number(*it, "smoothing", s.astar.smoothing, "astar");
    }
    if (const auto it = root.find("rrt"); it != root.end()) {
        check_keys(*it, {"step", "max_iterations", "goal_bias"}, "rrt");
        s.rrt.step = read_number(*it, "step", s.rrt.step, "rrt");
        s.rrt.max_iterations =
            static_cast<int>(read_integer(*it, "max_iterations", s.rrt.max_iterations, "rrt"));
        s.rrt.goal_bias = read_number(*it, "goal_bias", s.rrt.goal_bias, "rrt");
    }
    if (const auto it = root.find("obstacles"); it != root.end()) {
        s.obstacle_rings = detail::parse_obstacle_collection(*it);
    }

    // Projection: one zone and one hemisphere (the start's) for everything.
    if (s.utm_zone < 1 || s.utm_zone > 60) {
        invalid("utm_zone must be in 1..60");
    }
    s.hemisphere = s.start_geo.lat < 0.0 ? geo::Hemisphere::South : geo::Hemisphere::North;
    auto project = [&](const geo::GeoPoint &g, const std::string &what) {
        try {
            return geo::project_to_utm(g, s.utm_zone, s.hemisphere).xy();
        } catch (const Error &e) {
            invalid(what + ": " + e.detail());
        }
    };
    s.start = project(s.start_geo, "start");
    s.end = project(s.end_geo, "end");
    for (std::size_t i = 0; i < s.obstacle_rings.size(); ++i) {
        geo::ObstaclePolygon poly;
        for (const auto &g : s.obstacle_rings[i]) {
            poly.vertices.push_back(project(g, "obstacle " + std::to_string(i)));
        }
        try {
            geo::validate_polygon(poly);
            if (s.buffer_scale.sx != 1.0 || s.buffer_scale.sy != 1.0) {
                poly = geo::buffer_obstacle(poly, s.buffer_scale.sx, s.buffer_scale.sy);
            }
        } catch (const Error &e) {
            invalid("obstacle " + std::to_string(i) + ": " + e.detail());
        }
        s.obstacles.push_back(std::move(poly));
    }
    validate_scenario(s);
    return s;
}

Scenario load_scenario(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read scenario " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str(), path.stem().string());
}

} // namespace quav::harness
