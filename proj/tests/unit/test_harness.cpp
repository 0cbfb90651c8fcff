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

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "quav/error.hpp"
#include "quav/harness/benchmark.hpp"
#include "quav/harness/geojson.hpp"
#include "quav/harness/pipeline.hpp"
#include "quav/harness/scenario.hpp"
#include "quav/harness/svg.hpp"
#include "quav/qaoa/io.hpp"
#include "support/oracles.hpp"

using namespace quav;
using namespace quav::harness;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures{QUAV_FIXTURE_DIR};

Scenario fixture(const std::string &name) { return load_scenario(kFixtures / (name + ".json")); }

std::optional<ErrorCode> code_of(auto &&fn, std::string *message = nullptr) {
    try {
        fn();
    } catch (const Error &e) {
        if (message != nullptr) {
            *message = e.what();
        }
        return e.code();
    }
    return std::nullopt;
}

constexpr const char *kMinimal =
    R"({"start": {"lat": 23.13, "lon": 113.26}, "end": {"lat": 23.1301, "lon": 113.2602}})";

// Optional prolog, then balanced tags with quoted attribute values.
bool well_formed_xml(std::string text) {
    if (text.rfind("<?xml", 0) == 0) {
        text.erase(0, text.find("?>") + 2);
    }
    std::vector<std::string> stack;
    const std::regex tag(R"(<(/?)([A-Za-z][\w:-]*)((?:\s+[\w:-]+="[^"<]*")*)\s*(/?)>)");
    std::size_t pos = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), tag);
         it != std::sregex_iterator(); ++it) {
        const auto &m = *it;
        if (text.substr(pos, static_cast<std::size_t>(m.position()) - pos).find('<') !=
            std::string::npos) {
            return false;
        }
        pos = static_cast<std::size_t>(m.position() + m.length());
        if (m[1].length() > 0) {
            if (stack.empty() || stack.back() != m[2].str()) {
                return false;
            }
            stack.pop_back();
        } else if (m[4].length() == 0) {
            stack.push_back(m[2].str());
        }
    }
    return stack.empty() && text.find('<', pos) == std::string::npos;
}

std::vector<double> numbers_in(const std::string &s) {
    std::vector<double> out;
    std::istringstream in(std::regex_replace(s, std::regex("[, ]+"), " "));
    for (double v; in >> v;) {
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST_SUITE("scenario") {
    TEST_CASE("minimal scenario takes defaults") {
        const auto s = parse_scenario(kMinimal, "mini");
        CHECK(s.name == "mini");
        CHECK(s.obstacles.empty());
        CHECK(s.qaoa.qubits == 20);
        CHECK(s.qaoa.layers == 5);
        CHECK(s.qaoa.learning_rate == 0.1);
        CHECK(s.cost.obstacle_penalty == 1.0e6);
        CHECK(s.cost.start_bias == -1.0e3);
        CHECK(s.start.x == doctest::Approx(731428.0).epsilon(1e-5));
        CHECK(geo::distance(s.start, s.end) > 10.0);
        const auto back = s.to_geo(s.end);
        CHECK(back.lat == doctest::Approx(23.1301).epsilon(1e-12));
    }

    TEST_CASE("fixture loads with overrides and a projected obstacle") {
        const auto s = fixture("small_wall");
        CHECK(s.name == "small_wall");
        CHECK(s.qaoa.qubits == 6);
        CHECK(s.cost.buffer_distance == 1.0);
        REQUIRE(s.obstacles.size() == 1);
        CHECK(geo::point_in_polygon(s.start + geo::Point2{10.0, 0.0}, s.obstacles[0]));
        CHECK(std::abs(s.end.x - s.start.x - 20.0) < 1e-3);
        CHECK(std::abs(s.end.y - s.start.y) < 1e-3);
    }

    TEST_CASE("rejections name the problem") {
        std::string msg;
        CHECK(code_of([] { (void)fixture("start_in_obstacle"); }, &msg) ==
              ErrorCode::ValidationError);
        CHECK(msg.find("start in obstacle 0") != std::string::npos);

        CHECK(code_of([] { (void)parse_scenario(R"({"start": {"lat": 1, "lon": 2}, "end": {"lat": 1, "lon": 2.1}, "colour": 1})"); },
                      &msg) == ErrorCode::ParseError);
        CHECK(msg.find("colour") != std::string::npos);

        CHECK(code_of([] { (void)parse_scenario(R"({"start": {"lat": "north", "lon": 2}, "end": {"lat": 1, "lon": 2.1}})"); },
                      &msg) == ErrorCode::ParseError);
        CHECK(msg.find("start.lat") != std::string::npos);

        CHECK(code_of([] { (void)parse_scenario("{\n\"start\": {\n\"lat\": 1,,\n}}"); }, &msg) ==
              ErrorCode::ParseError);
        CHECK(msg.find("line 3") != std::string::npos);

        CHECK(code_of([] { (void)parse_scenario(R"({"start": {"lat": 1, "lon": 2}})"); }) ==
              ErrorCode::ParseError);
        CHECK(code_of([] { (void)load_scenario(kFixtures / "missing.json"); }) ==
              ErrorCode::IoError);

        auto s = parse_scenario(kMinimal);
        s.qaoa.qubits = 25;
        CHECK(code_of([&] { validate_scenario(s); }) == ErrorCode::ValidationError);
    }
}

TEST_SUITE("geojson") {
    TEST_CASE("round trip and coordinate order") {
        const auto s = fixture("small_wall");
        const auto r = run_astar(s);
        const auto text = plan_to_geojson(r, s);
        const auto parsed = parse_geojson_plan(text);
        REQUIRE(parsed.path.size() == r.path_geo.size());
        for (std::size_t i = 0; i < parsed.path.size(); ++i) {
            CHECK(std::abs(parsed.path[i].lat - r.path_geo[i].lat) < 1e-9);
            CHECK(std::abs(parsed.path[i].lon - r.path_geo[i].lon) < 1e-9);
        }
        REQUIRE(parsed.obstacles.size() == 1);
        CHECK(parsed.obstacles[0].size() == 4);

        const auto doc = nlohmann::json::parse(text);
        const nlohmann::json *line = nullptr;
        for (const auto &f : doc.at("features")) {
            if (f.at("geometry").at("type") == "LineString") {
                line = &f;
            }
        }
        REQUIRE(line != nullptr);
        const auto &first = line->at("geometry").at("coordinates").at(0);
        CHECK(first.at(0).get<double>() == doctest::Approx(s.start_geo.lon).epsilon(1e-12));
        CHECK(first.at(1).get<double>() == doctest::Approx(s.start_geo.lat).epsilon(1e-12));
        CHECK(line->at("properties").at("planner") == "astar");
    }

    TEST_CASE("empty path and malformed documents") {
        const auto s = fixture("small_empty");
        PlanResult r;
        r.path_geo = {s.start_geo};
        CHECK(code_of([&] { (void)plan_to_geojson(r, s); }) == ErrorCode::EmptyPath);
        CHECK(code_of([] { (void)parse_geojson_plan("{\"type\": \"Point\"}"); }) ==
              ErrorCode::ParseError);
        CHECK(code_of([] { (void)parse_geojson_plan("not json"); }) == ErrorCode::ParseError);
    }
}

TEST_SUITE("svg") {
    TEST_CASE("path figure is well formed and inside its view box") {
        const auto s = fixture("small_wall");
        const auto r = run_astar(s);
        const auto svg = path_svg(r, s);
        CHECK(well_formed_xml(svg));
        std::smatch m;
        REQUIRE(std::regex_search(svg, m, std::regex(R"(viewBox="0 0 ([\d.]+) ([\d.]+)\")")));
        const double w = std::stod(m[1]);
        const double h = std::stod(m[2]);
        REQUIRE(std::regex_search(svg, m, std::regex(R"(class="path" points="([^"]*)\")")));
        const auto xy = numbers_in(m[1]);
        REQUIRE(xy.size() == 2 * r.path.size());
        for (std::size_t i = 0; i < xy.size(); i += 2) {
            CHECK(xy[i] >= 0.0);
            CHECK(xy[i] <= w);
            CHECK(xy[i + 1] >= 0.0);
            CHECK(xy[i + 1] <= h);
        }
        const std::regex obstacle("class=\"obstacle\"");
        CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), obstacle),
                            std::sregex_iterator()) == 1);
    }

    TEST_CASE("loss figure") {
        qaoa::LossTrace t;
        t.loss = {0.5, 0.1, -0.2, -0.1};
        t.best_loss = {0.5, 0.1, -0.2, -0.2};
        const auto svg = loss_svg(t, -0.4);
        CHECK(well_formed_xml(svg));
        CHECK(svg.find("class=\"ground\"") != std::string::npos);
        CHECK(svg.find("class=\"best\"") != std::string::npos);
    }
}

TEST_SUITE("pipeline") {
    TEST_CASE("planner names") {
        CHECK(parse_planner("quav") == Planner::Quav);
        CHECK(to_string(Planner::Rrt) == "rrt");
        CHECK(code_of([] { (void)parse_planner("dfs"); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("path metrics agree with a sampled sweep") {
        const auto s = fixture("small_wall");
        const auto at = [&s](double x, double y) { return s.start + geo::Point2{x, y}; };
        const std::vector<geo::Point2> through{at(0, 0), at(20, 0)};
        const std::vector<geo::Point2> around{at(0, 0), at(10, 6), at(20, 0)};
        const std::vector<geo::Point2> grazing{at(0, 0), at(10, 3.5), at(20, 0)};
        const auto a = evaluate_path(through, s.obstacles, 1.0);
        const auto b = evaluate_path(around, s.obstacles, 1.0);
        const auto c = evaluate_path(grazing, s.obstacles, 1.0);
        CHECK_FALSE(a.feasible);
        CHECK(a.length == doctest::Approx(20.0));
        CHECK(b.feasible);
        CHECK(b.buffer_violations == 0);
        CHECK(c.feasible);
        CHECK(c.buffer_violations == 2);
        const auto &ring = s.obstacles[0].vertices;
        CHECK(quav::testing::sampled_segment_hits(at(0, 0), at(20, 0), ring, 400));
        CHECK(quav::testing::sampled_segment_ring_distance(at(0, 0), at(10, 3.5), ring, 400) <
              1.0);
    }

    TEST_CASE("obstacle-free QAOA run is within 2% of the straight line") {
        const auto s = fixture("small_empty");
        const auto r = run_quav(s, 0);
        const double chord = geo::distance(s.start, s.end);
        CHECK(r.feasible);
        CHECK(r.length <= 1.02 * chord);
        REQUIRE(r.trace.has_value());
        CHECK(r.trace->size() == static_cast<std::size_t>(s.qaoa.steps));
        CHECK(r.bitstring.size() == static_cast<std::size_t>(s.qaoa.qubits));
        CHECK(r.path.front() == s.start);
        CHECK(r.path.back() == s.end);
    }

    TEST_CASE("QAOA run is deterministic and its feasibility matches a sampled sweep") {
        const auto s = fixture("small_wall");
        const auto a = run_quav(s, 4);
        const auto b = run_quav(s, 4);
        CHECK(a.path == b.path);
        CHECK(a.bitstring == b.bitstring);
        CHECK(a.trace->loss == b.trace->loss);
        bool hits = false;
        for (std::size_t i = 1; i < a.path.size(); ++i) {
            hits = hits || quav::testing::sampled_segment_hits(a.path[i - 1], a.path[i],
                                                               s.obstacles[0].vertices, 400);
        }
        CHECK(a.feasible == !hits);
        CHECK(a.feasible);
        CHECK(a.ground_energy <= a.trace->best_loss.back() + 1e-12);
    }

    TEST_CASE("baseline failures carry their code and stage") {
        std::string msg;
        CHECK(code_of([] { (void)run_astar(fixture("enclosed_end")); }, &msg) ==
              ErrorCode::NoPathExists);
        CHECK(msg.find("search stage") != std::string::npos);
        CHECK(code_of([] { (void)run_rrt(fixture("rrt_starved"), 0); }) ==
              ErrorCode::MaxIterationsExceeded);
    }
}

TEST_SUITE("benchmark") {
    TEST_CASE("seed ranges") {
        CHECK(parse_seed_range("0..3") == std::vector<std::uint64_t>{0, 1, 2, 3});
        CHECK(parse_seed_range("5,2,9") == std::vector<std::uint64_t>{5, 2, 9});
        CHECK(code_of([] { (void)parse_seed_range("3..x"); }) == ErrorCode::ParseError);
    }

    TEST_CASE("median counts failures as infinite") {
        CHECK(median({3.0, 1.0, 2.0}) == 2.0);
        CHECK(median({1.0, 2.0, 3.0, 4.0}) == 2.5);
        CHECK(std::isinf(median({1.0, INFINITY, INFINITY})));
    }

    TEST_CASE("obstacle-free ordering and sorted rows") {
        const auto s = fixture("small_empty");
        BenchmarkOptions o;
        o.seeds = {1, 0};
        o.workers = 2;
        const auto rows = run_benchmark(s, o);
        REQUIRE(rows.size() == 6);
        CHECK(rows[0].planner == Planner::AStar);
        CHECK(rows[0].seed == 0);
        CHECK(rows[1].seed == 1);
        CHECK(rows[2].planner == Planner::Quav);
        CHECK(rows[4].planner == Planner::Rrt);
        for (const auto &r : rows) {
            CHECK(r.feasible);
        }
        const auto sum = summarize(rows);
        REQUIRE(sum.size() == 3);
        CHECK(sum[0].median_length <= sum[1].median_length + 1e-9);
        CHECK(sum[1].median_length <= sum[2].median_length + 1e-9);
    }

    TEST_CASE("failed rows keep a diagnostic and print as inf") {
        BenchmarkOptions o;
        o.planners = {Planner::Rrt};
        const auto rows = run_benchmark(fixture("rrt_starved"), o);
        REQUIRE(rows.size() == 1);
        CHECK_FALSE(rows[0].feasible);
        CHECK(std::isinf(rows[0].length_m));
        CHECK(rows[0].diagnostic.find("iteration") != std::string::npos);
        const auto csv = benchmark_csv(rows);
        CHECK(csv.rfind(std::string(kBenchmarkCsvHeader) + "\n", 0) == 0);
        CHECK(csv.find(",inf,") != std::string::npos);
        CHECK(benchmark_csv(rows, false).find("scenario,") == std::string::npos);
    }

    TEST_CASE("appending writes the header once") {
        const auto file = fs::temp_directory_path() / "quav_bench_append.csv";
        fs::remove(file);
        BenchmarkRow row{"x", Planner::AStar, 0, 12.5, true, 0, 1.0, ""};
        append_benchmark_csv(file, std::span(&row, 1));
        append_benchmark_csv(file, std::span(&row, 1));
        const auto text = qaoa::read_text_file(file);
        CHECK(std::count(text.begin(), text.end(), '\n') == 3);
        CHECK(text.find("scenario,") == 0);
        CHECK(text.find("scenario,", 1) == std::string::npos);
        fs::remove(file);
    }

    TEST_CASE("layer sweep") {
        const auto s = fixture("small_empty");
        const std::vector<double> values{1, 2};
        const std::vector<std::uint64_t> seeds{0};
        const auto rows = run_sweep(s, SweepParam::Layers, values, seeds, 2);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].value == 1);
        CHECK(rows[1].value == 2);
        CHECK(rows[0].feasible);
        const auto csv = sweep_csv(rows);
        CHECK(csv.rfind(std::string(kSweepCsvHeader), 0) == 0);
        CHECK(parse_sweep_param("lambda") == SweepParam::Lambda);
        CHECK(code_of([] { (void)parse_sweep_param("beta"); }) == ErrorCode::InvalidArgument);
    }
}
