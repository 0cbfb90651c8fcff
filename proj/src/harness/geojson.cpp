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
#include "quav/harness/geojson.hpp"

#include <algorithm>

#include <json.hpp>

#include "harness/geojson_parse.hpp"
#include "quav/error.hpp"
#include "quav/qaoa/io.hpp"

namespace quav::harness {

using nlohmann::json;

namespace detail {

geo::GeoPoint parse_position(const json &pos, const std::string &where) {
    if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number()) {
        throw Error(ErrorCode::ParseError, where + ": position must be [lon, lat]");
    }
    return {pos[1].get<double>(), pos[0].get<double>()};
}

namespace {

std::vector<geo::GeoPoint> parse_ring(const json &ring, const std::string &where) {
    if (!ring.is_array()) {
        throw Error(ErrorCode::ParseError, where + ": ring must be an array");
    }
    std::vector<geo::GeoPoint> pts;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        pts.push_back(parse_position(ring[i], where + "[" + std::to_string(i) + "]"));
    }
    if (pts.size() >= 2 && pts.front() == pts.back()) {
        pts.pop_back();
    }
    if (pts.size() < 3) {
        throw Error(ErrorCode::ParseError, where + ": ring needs at least three distinct vertices");
    }
    return pts;
}

void parse_polygon(const json &rings, const std::string &where,
                   std::vector<std::vector<geo::GeoPoint>> &out) {
    if (!rings.is_array() || rings.empty()) {
        throw Error(ErrorCode::ParseError, where + ": polygon needs an outer ring");
    }
    if (rings.size() > 1) {
        throw Error(ErrorCode::ParseError, where + ": polygons with holes are not supported");
    }
    out.push_back(parse_ring(rings[0], where));
}

void parse_item(const json &item, const std::string &where,
                std::vector<std::vector<geo::GeoPoint>> &out) {
    if (!item.is_object() || !item.contains("type") || !item["type"].is_string()) {
        throw Error(ErrorCode::ParseError, where + ": expected a GeoJSON object with a type");
    }
    const auto type = item["type"].get<std::string>();
    if (type == "FeatureCollection") {
        const auto &features = item.value("features", json::array());
        for (std::size_t i = 0; i < features.size(); ++i) {
            parse_item(features[i], where + ".features[" + std::to_string(i) + "]", out);
        }
    } else if (type == "Feature") {
        if (!item.contains("geometry") || item["geometry"].is_null()) {
            throw Error(ErrorCode::ParseError, where + ": feature without geometry");
        }
        parse_item(item["geometry"], where, out);
    } else if (type == "Polygon") {
        parse_polygon(item.value("coordinates", json()), where, out);
    } else if (type == "MultiPolygon") {
        const auto &polys = item.value("coordinates", json());
        if (!polys.is_array()) {
            throw Error(ErrorCode::ParseError, where + ": MultiPolygon coordinates must be an array");
        }
        for (std::size_t i = 0; i < polys.size(); ++i) {
            parse_polygon(polys[i], where + "[" + std::to_string(i) + "]", out);
        }
    } else {
        throw Error(ErrorCode::ParseError, where + ": unsupported obstacle type '" + type + "'");
    }
}

} // namespace

std::vector<std::vector<geo::GeoPoint>> parse_obstacle_collection(const json &doc) {
    std::vector<std::vector<geo::GeoPoint>> out;
    if (doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i) {
            parse_item(doc[i], "obstacles[" + std::to_string(i) + "]", out);
        }
    } else {
        parse_item(doc, "obstacles", out);
    }
    return out;
}

} // namespace detail

namespace {

json position(const geo::GeoPoint &g) { return json::array({g.lon, g.lat}); }

// Closed ring, counterclockwise in (lon, lat).
json closed_ring(std::vector<geo::GeoPoint> ring) {
    double area = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const auto &a = ring[i];
        const auto &b = ring[(i + 1) % ring.size()];
        area += a.lon * b.lat - b.lon * a.lat;
    }
    if (area < 0.0) {
        std::reverse(ring.begin(), ring.end());
    }
    json coords = json::array();
    for (const auto &g : ring) {
        coords.push_back(position(g));
    }
    coords.push_back(position(ring.front()));
    return coords;
}

} // namespace

std::string plan_to_geojson(const PlanResult &r, const Scenario &s) {
    if (r.path_geo.size() < 2) {
        throw Error(ErrorCode::EmptyPath, "GeoJSON output needs at least two waypoints");
    }
    json line = json::array();
    for (const auto &g : r.path_geo) {
        line.push_back(position(g));
    }
    json features = json::array();
    features.push_back({{"type", "Feature"},
                        {"geometry", {{"type", "LineString"}, {"coordinates", line}}},
                        {"properties",
                         {{"role", "path"},
                          {"planner", std::string(to_string(r.planner))},
                          {"scenario", r.scenario},
                          {"seed", r.seed},
                          {"length_m", r.length},
                          {"feasible", r.feasible},
                          {"buffer_violations", r.buffer_violations}}}});
    for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
        std::vector<geo::GeoPoint> ring;
        for (const auto &p : s.obstacles[i].vertices) {
            ring.push_back(s.to_geo(p));
        }
        features.push_back({{"type", "Feature"},
                            {"geometry",
                             {{"type", "Polygon"},
                              {"coordinates", json::array({closed_ring(std::move(ring))})}}},
                            {"properties", {{"role", "obstacle"}, {"index", i}}}});
    }
    const json doc = {{"type", "FeatureCollection"}, {"features", features}};
    return doc.dump(2) + "\n";
}

void emit_geojson(const PlanResult &r, const Scenario &s, const std::filesystem::path &file) {
    qaoa::write_text_file(file, plan_to_geojson(r, s));
}

GeoJsonPlan parse_geojson_plan(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("malformed GeoJSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" ||
        !doc.contains("features") || !doc["features"].is_array()) {
        throw Error(ErrorCode::ParseError, "expected a FeatureCollection");
    }
    GeoJsonPlan out;
    bool have_path = false;
    const auto &features = doc["features"];
    for (std::size_t i = 0; i < features.size(); ++i) {
        const auto &f = features[i];
        const std::string where = "features[" + std::to_string(i) + "]";
        if (!f.is_object() || !f.contains("geometry") || !f["geometry"].is_object()) {
            throw Error(ErrorCode::ParseError, where + ": feature without geometry");
        }
        const auto &g = f["geometry"];
        const auto type = g.value("type", "");
        if (type == "LineString") {
            if (have_path) {
                continue;
            }
            const auto &coords = g.value("coordinates", json::array());
            for (std::size_t k = 0; k < coords.size(); ++k) {
                out.path.push_back(
                    detail::parse_position(coords[k], where + "[" + std::to_string(k) + "]"));
            }
            have_path = true;
        } else {
            auto rings = detail::parse_obstacle_collection(f);
            out.obstacles.insert(out.obstacles.end(), rings.begin(), rings.end());
        }
    }
    if (!have_path) {
        throw Error(ErrorCode::ParseError, "no LineString feature");
    }
    return out;
}

GeoJsonPlan load_geojson_plan(const std::filesystem::path &file) {
    return parse_geojson_plan(qaoa::read_text_file(file));
}

} // namespace quav::harness
