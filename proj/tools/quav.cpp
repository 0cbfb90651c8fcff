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
// quav: command-line front end for planning, benchmarking and sweeps.
//
// Exit codes: 0 success, 1 other failure, 2 invalid input, 3 no feasible path.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quav/error.hpp"
#include "quav/harness/benchmark.hpp"
#include "quav/harness/geojson.hpp"
#include "quav/harness/pipeline.hpp"
#include "quav/harness/scenario.hpp"
#include "quav/harness/svg.hpp"
#include "quav/qaoa/io.hpp"

namespace {

using namespace quav;
using namespace quav::harness;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;

struct Overrides {
    std::optional<double> obstacle_penalty;
    std::optional<double> start_bias;
    std::optional<double> buffer_distance;
    std::optional<double> lambda;
    std::optional<double> smoothness_weight;
    std::optional<int> qubits;
    std::optional<int> layers;
    std::optional<int> steps;
    std::optional<double> lr;
    std::optional<std::size_t> shots;
    std::optional<std::string> encoding;
    std::optional<double> coupling;
    std::optional<std::string> loss_mode;

    void attach(CLI::App *app) {
        app->add_option("--obstacle-penalty", obstacle_penalty, "Penalty for obstacle edges")
            ->group("Cost");
        app->add_option("--start-bias", start_bias, "Bias for edges leaving the start")
            ->group("Cost");
        app->add_option("--buffer-distance", buffer_distance, "Clearance in meters")
            ->group("Cost");
        app->add_option("--lambda", lambda, "Obstacle penalty weight")->group("Cost");
        app->add_option("--smoothness-weight", smoothness_weight, "Turning penalty weight")
            ->group("Cost");
        app->add_option("--qubits", qubits, "Qubits (one per edge)")->group("QAOA");
        app->add_option("--layers,-k", layers, "QAOA layers")->group("QAOA");
        app->add_option("--steps", steps, "Optimizer steps")->group("QAOA");
        app->add_option("--lr", lr, "Adam learning rate")->group("QAOA");
        app->add_option("--shots", shots, "Measurement shots")->group("QAOA");
        app->add_option("--encoding", encoding, "segment | select")->group("QAOA");
        app->add_option("--coupling", coupling, "Continuity coupling")->group("QAOA");
        app->add_option("--loss-mode", loss_mode, "exact | shots")->group("QAOA");
    }

    void apply(Scenario &s) const {
        auto set = [](auto &field, const auto &value) {
            if (value) {
                field = *value;
            }
        };
        set(s.cost.obstacle_penalty, obstacle_penalty);
        set(s.cost.start_bias, start_bias);
        set(s.cost.lambda, lambda);
        set(s.cost.smoothness_weight, smoothness_weight);
        set(s.qaoa.qubits, qubits);
        set(s.qaoa.layers, layers);
        set(s.qaoa.steps, steps);
        set(s.qaoa.learning_rate, lr);
        set(s.qaoa.shots, shots);
        set(s.qaoa.coupling, coupling);
        if (buffer_distance) {
            s.cost.buffer_distance = *buffer_distance;
        }
        if (encoding) {
            try {
                s.qaoa.encoding = qaoa::parse_encoding(*encoding);
            } catch (const Error &e) {
                throw Error(ErrorCode::ValidationError, "--encoding: " + e.detail());
            }
        }
        if (loss_mode) {
            if (*loss_mode != "exact" && *loss_mode != "shots") {
                throw Error(ErrorCode::ValidationError, "--loss-mode must be exact or shots");
            }
            s.qaoa.shot_loss = *loss_mode == "shots";
        }
        validate_scenario(s);
    }
};

Scenario load(const std::string &path, const Overrides &o) {
    Scenario s = load_scenario(path);
    o.apply(s);
    return s;
}

int exit_code_for(const Error &e) {
    switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::StartInObstacle:
    case ErrorCode::EndInObstacle:
    case ErrorCode::TooManyQubits:
        return kExitInvalid;
    case ErrorCode::NoFeasibleSample:
    case ErrorCode::NoPathExists:
    case ErrorCode::MaxIterationsExceeded:
        return kExitInfeasible;
    default:
        return kExitFailure;
    }
}

void print_result(const PlanResult &r) {
    std::printf("planner            %s\n", std::string(to_string(r.planner)).c_str());
    std::printf("scenario           %s\n", r.scenario.c_str());
    std::printf("seed               %llu\n", static_cast<unsigned long long>(r.seed));
    std::printf("waypoints          %zu\n", r.path.size());
    std::printf("length_m           %.3f\n", r.length);
    std::printf("feasible           %s\n", r.feasible ? "true" : "false");
    std::printf("buffer_violations  %d\n", r.buffer_violations);
    if (r.trace) {
        std::printf("initial_loss       %.6f\n", r.trace->loss.front());
        std::printf("best_loss          %.6f\n", r.trace->best_loss.back());
        std::printf("ground_energy      %.6f\n", r.ground_energy);
        std::printf("bitstring          %s\n", r.bitstring.c_str());
        std::printf("decoded_feasible   %s\n", r.decoded_feasible ? "true" : "false");
        std::printf("repaired_runs      %d\n", r.repaired_runs);
    }
    std::printf("wall_ms            %.1f\n", r.wall_ms);
    if (!r.diagnostic.empty()) {
        std::printf("diagnostic         %s\n", r.diagnostic.c_str());
    }
}

void write_outputs(const PlanResult &r, const Scenario &s, const std::filesystem::path &dir) {
    std::filesystem::create_directories(dir);
    const std::string stem = s.name + "_" + std::string(to_string(r.planner)) + "_seed" +
                             std::to_string(r.seed);
    emit_geojson(r, s, dir / (stem + ".geojson"));
    emit_plot_svg(r, s, dir / (stem + ".svg"));
    if (r.trace) {
        qaoa::write_text_file(dir / (stem + "_trace.csv"), qaoa::loss_trace_csv(*r.trace));
        qaoa::write_text_file(dir / (stem + "_params.txt"), qaoa::params_to_text(*r.params));
    }
    std::printf("outputs            %s/%s.*\n", dir.string().c_str(), stem.c_str());
}

std::vector<double> parse_values(const std::string &text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw Error(ErrorCode::ValidationError, "bad value '" + item + "' in --values");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum-assisted UAV path planner: QAOA edge selection with A* and RRT "
                 "baselines"};
    app.require_subcommand(1);
    Overrides overrides;

    auto *plan = app.add_subcommand("plan", "Plan one path and write GeoJSON/SVG/CSV outputs");
    std::string plan_scenario;
    std::string planner_name = "quav";
    std::optional<std::uint64_t> plan_seed;
    std::string out_dir;
    plan->add_option("scenario", plan_scenario, "Scenario JSON file")->required();
    plan->add_option("--planner", planner_name, "quav | astar | rrt");
    plan->add_option("--seed", plan_seed, "Run seed (default: scenario seed)");
    plan->add_option("--out", out_dir, "Output directory");
    overrides.attach(plan);

    auto *bench = app.add_subcommand("benchmark", "Compare planners over a range of seeds");
    std::vector<std::string> bench_scenarios;
    std::string seeds_text = "0..9";
    std::vector<std::string> planner_names;
    std::string csv_path;
    unsigned workers = 0;
    bench->add_option("scenarios", bench_scenarios, "Scenario JSON files")->required();
    bench->add_option("--seeds", seeds_text, "Seed range a..b or list a,b,c");
    bench->add_option("--planners", planner_names, "Subset of planners")->delimiter(',');
    bench->add_option("--csv", csv_path, "Append rows to this CSV file");
    bench->add_option("--workers", workers, "Worker threads (0 = all cores)");
    overrides.attach(bench);

    auto *sweep = app.add_subcommand("sweep", "Sweep one QAOA parameter");
    std::string sweep_scenario;
    std::string param_name;
    std::string values_text;
    std::string sweep_seeds = "0";
    std::string sweep_csv_path;
    sweep->add_option("scenario", sweep_scenario, "Scenario JSON file")->required();
    sweep->add_option("--param", param_name, "k | lr | lambda")->required();
    sweep->add_option("--values", values_text, "Comma-separated values")->required();
    sweep->add_option("--seeds", sweep_seeds, "Seed range a..b or list a,b,c");
    sweep->add_option("--csv", sweep_csv_path, "Write rows to this CSV file");
    sweep->add_option("--workers", workers, "Worker threads (0 = all cores)");
    overrides.attach(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*plan) {
            const Planner planner = [&] {
                try {
                    return parse_planner(planner_name);
                } catch (const Error &e) {
                    throw Error(ErrorCode::ValidationError, "--planner: " + e.detail());
                }
            }();
            const Scenario s = load(plan_scenario, overrides);
            const auto seed = plan_seed.value_or(s.qaoa.seed);
            const PlanResult r = run_planner(planner, s, seed);
            print_result(r);
            if (!out_dir.empty()) {
                write_outputs(r, s, out_dir);
            }
            return r.feasible ? kExitOk : kExitInfeasible;
        }
        if (*bench) {
            std::vector<Scenario> scenarios;
            for (const auto &path : bench_scenarios) {
                scenarios.push_back(load(path, overrides));
            }
            BenchmarkOptions opts;
            opts.seeds = parse_seed_range(seeds_text);
            opts.workers = workers;
            if (!planner_names.empty()) {
                opts.planners.clear();
                for (const auto &name : planner_names) {
                    opts.planners.push_back(parse_planner(name));
                }
            }
            const auto rows = run_benchmark(scenarios, opts);
            if (csv_path.empty()) {
                std::cout << benchmark_csv(rows);
            } else {
                append_benchmark_csv(csv_path, rows);
            }
            for (const auto &row : rows) {
                if (!row.diagnostic.empty()) {
                    std::cerr << row.scenario << " " << to_string(row.planner) << " seed "
                              << row.seed << ": " << row.diagnostic << "\n";
                }
            }
            for (const auto &sum : summarize(rows)) {
                std::fprintf(stderr, "%-20s %-6s feasible %d/%d  median length %.3f m  mean %.1f ms\n",
                             sum.scenario.c_str(), std::string(to_string(sum.planner)).c_str(),
                             sum.feasible, sum.runs, sum.median_length, sum.mean_wall_ms);
            }
            return kExitOk;
        }
        if (*sweep) {
            const Scenario s = load(sweep_scenario, overrides);
            const auto param = parse_sweep_param(param_name);
            const auto values = parse_values(values_text);
            const auto seeds = parse_seed_range(sweep_seeds);
            const auto rows = run_sweep(s, param, values, seeds, workers);
            if (sweep_csv_path.empty()) {
                std::cout << sweep_csv(rows);
            } else {
                qaoa::write_text_file(sweep_csv_path, sweep_csv(rows));
            }
            return kExitOk;
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
