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
 * Multi-seed planner comparisons and parameter sweeps, fanned out over a
 * worker pool. Results are sorted before they are returned, so output does
 * not depend on scheduling.
 *
 * Benchmark CSV columns:
 *   scenario,planner,seed,length_m,feasible,buffer_violations,wall_ms
 * length_m is "inf" for a run that produced no path.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quav/harness/pipeline.hpp"

namespace quav::harness {

inline constexpr std::string_view kBenchmarkCsvHeader =
    "scenario,planner,seed,length_m,feasible,buffer_violations,wall_ms";

struct BenchmarkRow {
    std::string scenario;
    Planner planner{Planner::Quav};
    std::uint64_t seed{0};
    /// +inf when the planner failed.
    double length_m{0.0};
    bool feasible{false};
    int buffer_violations{0};
    double wall_ms{0.0};
    std::string diagnostic;
};

struct BenchmarkOptions {
    std::vector<std::uint64_t> seeds{0};
    std::vector<Planner> planners{Planner::Quav, Planner::AStar, Planner::Rrt};
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers{0};
};

/// Failed runs become rows with feasible = false and a diagnostic.
std::vector<BenchmarkRow> run_benchmark(std::span<const Scenario> scenarios,
                                        const BenchmarkOptions &opts);
std::vector<BenchmarkRow> run_benchmark(const Scenario &s, const BenchmarkOptions &opts);

/// Parses "a..b" (inclusive) or a comma-separated list. @throws Error(ParseError).
std::vector<std::uint64_t> parse_seed_range(std::string_view text);

std::string benchmark_csv(std::span<const BenchmarkRow> rows, bool header = true);

/// Appends rows; the header is written only when the file is new or empty.
/// @throws Error(IoError).
void append_benchmark_csv(const std::filesystem::path &file, std::span<const BenchmarkRow> rows);

struct PlannerSummary {
    std::string scenario;
    Planner planner{Planner::Quav};
    int runs{0};
    int feasible{0};
    /// Median over all runs, failures counted as +inf.
    double median_length{0.0};
    double mean_wall_ms{0.0};
};

std::vector<PlannerSummary> summarize(std::span<const BenchmarkRow> rows);

double median(std::vector<double> values);

enum class SweepParam { Layers, LearningRate, Lambda };

std::string_view to_string(SweepParam p);
/// Accepts "k", "lr", "lambda". @throws Error(InvalidArgument).
SweepParam parse_sweep_param(std::string_view name);

inline constexpr std::string_view kSweepCsvHeader =
    "param,value,seed,best_loss,length_m,feasible,buffer_violations,wall_ms";

struct SweepRow {
    SweepParam param{SweepParam::Layers};
    double value{0.0};
    std::uint64_t seed{0};
    double best_loss{0.0};
    double length_m{0.0};
    bool feasible{false};
    int buffer_violations{0};
    double wall_ms{0.0};
    std::string diagnostic;
};

/// QAOA runs with one parameter overridden per value, for every seed.
std::vector<SweepRow> run_sweep(const Scenario &s, SweepParam param,
                                std::span<const double> values,
                                std::span<const std::uint64_t> seeds, unsigned workers = 0);

std::string sweep_csv(std::span<const SweepRow> rows, bool header = true);

} // namespace quav::harness
