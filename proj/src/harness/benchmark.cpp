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
#include "quav/harness/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "quav/error.hpp"

namespace quav::harness {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Runs task(i) for i in [0, count) on a pool of threads.
template <class Task>
void parallel_for(std::size_t count, unsigned workers, Task &&task) {
    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::string format_number(double v, int digits) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t v = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw Error(ErrorCode::ParseError, "bad seed '" + std::string(text) + "'");
    }
    return v;
}

} // namespace

std::vector<BenchmarkRow> run_benchmark(std::span<const Scenario> scenarios,
                                        const BenchmarkOptions &opts) {
    struct Job {
        std::size_t scenario;
        Planner planner;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
        for (Planner p : opts.planners) {
            for (auto seed : opts.seeds) {
                jobs.push_back({s, p, seed});
            }
        }
    }
    std::vector<BenchmarkRow> rows(jobs.size());
    parallel_for(jobs.size(), opts.workers, [&](std::size_t i) {
        const auto &job = jobs[i];
        const Scenario &s = scenarios[job.scenario];
        BenchmarkRow &row = rows[i];
        row.scenario = s.name;
        row.planner = job.planner;
        row.seed = job.seed;
        try {
            const auto r = run_planner(job.planner, s, job.seed);
            row.length_m = r.length;
            row.feasible = r.feasible;
            row.buffer_violations = r.buffer_violations;
            row.wall_ms = r.wall_ms;
            row.diagnostic = r.diagnostic;
        } catch (const Error &e) {
            row.length_m = kInf;
            row.feasible = false;
            row.diagnostic = e.what();
        }
    });
    std::sort(rows.begin(), rows.end(), [](const BenchmarkRow &a, const BenchmarkRow &b) {
        return std::tuple(a.scenario, to_string(a.planner), a.seed) <
               std::tuple(b.scenario, to_string(b.planner), b.seed);
    });
    return rows;
}

std::vector<BenchmarkRow> run_benchmark(const Scenario &s, const BenchmarkOptions &opts) {
    return run_benchmark(std::span<const Scenario>(&s, 1), opts);
}

std::vector<std::uint64_t> parse_seed_range(std::string_view text) {
    std::vector<std::uint64_t> seeds;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const auto lo = parse_u64(text.substr(0, dots));
        const auto hi = parse_u64(text.substr(dots + 2));
        if (hi < lo || hi - lo >= 1000000) {
            throw Error(ErrorCode::ParseError, "bad seed range '" + std::string(text) + "'");
        }
        for (auto s = lo; s <= hi; ++s) {
            seeds.push_back(s);
        }
        return seeds;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        seeds.push_back(parse_u64(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return seeds;
}

std::string benchmark_csv(std::span<const BenchmarkRow> rows, bool header) {
    std::string out;
    if (header) {
        out += std::string(kBenchmarkCsvHeader) + "\n";
    }
    for (const auto &r : rows) {
        out += csv_field(r.scenario) + "," + std::string(to_string(r.planner)) + "," +
               std::to_string(r.seed) + "," + format_number(r.length_m, 6) + "," +
               (r.feasible ? "true" : "false") + "," + std::to_string(r.buffer_violations) +
               "," + format_number(r.wall_ms, 3) + "\n";
    }
    return out;
}

void append_benchmark_csv(const std::filesystem::path &file, std::span<const BenchmarkRow> rows) {
    std::error_code ec;
    const bool fresh = !std::filesystem::exists(file, ec) || std::filesystem::file_size(file, ec) == 0;
    std::ofstream out(file, std::ios::binary | std::ios::app);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot append to " + file.string());
    }
    out << benchmark_csv(rows, fresh);
    if (!out) {
        throw Error(ErrorCode::IoError, "write failed for " + file.string());
    }
}

double median(std::vector<double> values) {
    if (values.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    const double lo = values[n / 2 - 1];
    const double hi = values[n / 2];
    return std::isinf(hi) ? hi : 0.5 * (lo + hi);
}

std::vector<PlannerSummary> summarize(std::span<const BenchmarkRow> rows) {
    std::map<std::pair<std::string, std::string>, std::vector<const BenchmarkRow *>> groups;
    for (const auto &r : rows) {
        groups[{r.scenario, std::string(to_string(r.planner))}].push_back(&r);
    }
    std::vector<PlannerSummary> out;
    for (const auto &[key, members] : groups) {
        PlannerSummary s;
        s.scenario = key.first;
        s.planner = members.front()->planner;
        std::vector<double> lengths;
        double wall = 0.0;
        for (const auto *r : members) {
            ++s.runs;
            s.feasible += r->feasible ? 1 : 0;
            lengths.push_back(r->length_m);
            wall += r->wall_ms;
        }
        s.median_length = median(std::move(lengths));
        s.mean_wall_ms = wall / s.runs;
        out.push_back(s);
    }
    return out;
}

std::string_view to_string(SweepParam p) {
    switch (p) {
    case SweepParam::Layers:
        return "k";
    case SweepParam::LearningRate:
        return "lr";
    case SweepParam::Lambda:
        return "lambda";
    }
    return "unknown";
}

SweepParam parse_sweep_param(std::string_view name) {
    for (auto p : {SweepParam::Layers, SweepParam::LearningRate, SweepParam::Lambda}) {
        if (name == to_string(p)) {
            return p;
        }
    }
    throw Error(ErrorCode::InvalidArgument,
                "unknown sweep parameter '" + std::string(name) + "' (expected k, lr or lambda)");
}

std::vector<SweepRow> run_sweep(const Scenario &s, SweepParam param,
                                std::span<const double> values,
                                std::span<const std::uint64_t> seeds, unsigned workers) {
    std::vector<Scenario> variants;
    for (double v : values) {
        Scenario t = s;
        switch (param) {
        case SweepParam::Layers:
            if (v < 1 || v != std::floor(v)) {
                throw Error(ErrorCode::ValidationError, "k values must be integers >= 1");
            }
            t.qaoa.layers = static_cast<int>(v);
            break;
        case SweepParam::LearningRate:
            t.qaoa.learning_rate = v;
            break;
        case SweepParam::Lambda:
            t.cost.lambda = v;
            break;
        }
        validate_scenario(t);
        variants.push_back(std::move(t));
    }
    std::vector<SweepRow> rows(values.size() * seeds.size());
    parallel_for(rows.size(), workers, [&](std::size_t i) {
        const std::size_t vi = i / seeds.size();
        SweepRow &row = rows[i];
        row.param = param;
        row.value = values[vi];
        row.seed = seeds[i % seeds.size()];
        try {
            const auto r = run_quav(variants[vi], row.seed);
            row.best_loss = r.trace ? r.trace->best_loss.back() : 0.0;
            row.length_m = r.length;
            row.feasible = r.feasible;
            row.buffer_violations = r.buffer_violations;
            row.wall_ms = r.wall_ms;
            row.diagnostic = r.diagnostic;
        } catch (const Error &e) {
            row.best_loss = std::numeric_limits<double>::quiet_NaN();
            row.length_m = kInf;
            row.diagnostic = e.what();
        }
    });
    return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows, bool header) {
    std::string out;
    if (header) {
        out += std::string(kSweepCsvHeader) + "\n";
    }
    for (const auto &r : rows) {
        out += std::string(to_string(r.param)) + "," + format_number(r.value, 6) + "," +
               std::to_string(r.seed) + "," + format_number(r.best_loss, 9) + "," +
               format_number(r.length_m, 6) + "," + (r.feasible ? "true" : "false") + "," +
               std::to_string(r.buffer_violations) + "," + format_number(r.wall_ms, 3) + "\n";
    }
    return out;
}

} // namespace quav::harness
