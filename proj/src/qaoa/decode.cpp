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
#include "quav/qaoa/decode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "quav/error.hpp"

namespace quav::qaoa {

using geo::Point2;

std::vector<RankedSample> rank_samples(const QaoaProblem &p,
                                       std::span<const qsim::Bitstring> samples) {
    std::map<qsim::Bitstring, std::size_t> counts;
    for (auto b : samples) {
        ++counts[b];
    }
    std::vector<RankedSample> out;
    out.reserve(counts.size());
    for (const auto &[bits, count] : counts) {
        out.push_back({bits, qsim::to_string(bits, p.num_qubits()), selection_cost(p, bits), count});
    }
    std::sort(out.begin(), out.end(), [](const RankedSample &a, const RankedSample &b) {
        if (a.cost != b.cost) {
            return a.cost < b.cost;
        }
        return a.text < b.text;
    });
    return out;
}

DecodedPath decode_bitstring(const EncodedProblem &enc, qsim::Bitstring bits) {
    const QaoaProblem &p = enc.problem;
    const int n = p.num_qubits();
    DecodedPath out;
    out.bits = bits;
    out.bitstring = qsim::to_string(bits, n);
    out.cost = selection_cost(p, bits);

    // Vertex ids by exact coordinates; edges are built from shared points.
    std::vector<Point2> verts{enc.start};
    auto vertex = [&verts](const Point2 &q) {
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (verts[i] == q) {
                return static_cast<int>(i);
            }
        }
        verts.push_back(q);
        return static_cast<int>(verts.size() - 1);
    };
    struct Arc {
        int from;
        int to;
        int edge;
    };
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        if (((bits >> i) & 1U) != 0) {
            const auto &e = enc.edges[static_cast<std::size_t>(i)];
            arcs.push_back({vertex(e.a), vertex(e.b), i});
        }
    }
    const int end = vertex(enc.end);

    // Bellman-Ford from the start over the included (forward) edges.
    const std::size_t nv = verts.size();
    std::vector<double> best(nv, std::numeric_limits<double>::infinity());
    std::vector<int> via(nv, -1);
    std::vector<int> hops(nv, 0);
    best[0] = 0.0;
    for (std::size_t round = 0; round + 1 < std::max<std::size_t>(nv, 2); ++round) {
        bool changed = false;
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            const auto &arc = arcs[a];
            const double c = best[static_cast<std::size_t>(arc.from)] +
                             p.costs.raw[static_cast<std::size_t>(arc.edge)];
            if (c < best[static_cast<std::size_t>(arc.to)] &&
                hops[static_cast<std::size_t>(arc.from)] < static_cast<int>(nv)) {
                best[static_cast<std::size_t>(arc.to)] = c;
                via[static_cast<std::size_t>(arc.to)] = static_cast<int>(a);
                hops[static_cast<std::size_t>(arc.to)] = hops[static_cast<std::size_t>(arc.from)] + 1;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }

    int target = end;
    if (std::isinf(best[static_cast<std::size_t>(end)])) {
        // Report the prefix that gets furthest (most hops) from the start.
        target = 0;
        for (std::size_t v = 1; v < nv; ++v) {
            if (!std::isinf(best[v]) && hops[v] > hops[static_cast<std::size_t>(target)]) {
                target = static_cast<int>(v);
            }
        }
    }
    std::vector<int> chain;
    for (int v = target; v != 0 && via[static_cast<std::size_t>(v)] >= 0;) {
        const auto &arc = arcs[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])];
        chain.push_back(arc.edge);
        v = arc.from;
        if (chain.size() > arcs.size()) {
            break;
        }
    }
    std::reverse(chain.begin(), chain.end());

    out.waypoints.push_back(enc.start);
    bool clear = true;
    for (int e : chain) {
        const auto idx = static_cast<std::size_t>(e);
        out.selected.push_back(e);
        out.waypoints.push_back(enc.edges[idx].b);
        out.path_cost += p.costs.raw[idx];
        clear = clear && !enc.assessments[idx].intersects;
    }
    out.feasible = target == end && !chain.empty() && clear;
    return out;
}

DecodedPath decode_path(const EncodedProblem &enc, std::span<const qsim::Bitstring> samples) {
    if (samples.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no samples to decode");
    }
    for (const auto &r : rank_samples(enc.problem, samples)) {
        auto d = decode_bitstring(enc, r.bits);
        if (d.feasible) {
            return d;
        }
    }
    throw Error(ErrorCode::NoFeasibleSample,
                "none of " + std::to_string(samples.size()) + " samples is a feasible path");
}

std::optional<DecodedPath> brute_force_optimum(const EncodedProblem &enc) {
    const int n = enc.problem.num_qubits();
    if (n > qsim::kMaxQubits) {
        throw Error(ErrorCode::TooManyQubits, "exhaustive search limited to 24 qubits");
    }
    const std::size_t count = std::size_t{1} << n;
    std::vector<double> costs(count);
    for (std::size_t b = 0; b < count; ++b) {
        costs[b] = selection_cost(enc.problem, b);
    }
    std::vector<qsim::Bitstring> order(count);
    std::iota(order.begin(), order.end(), qsim::Bitstring{0});
    std::sort(order.begin(), order.end(), [&](qsim::Bitstring a, qsim::Bitstring b) {
        if (costs[a] != costs[b]) {
            return costs[a] < costs[b];
        }
        return qsim::to_string(a, n) < qsim::to_string(b, n);
    });
    for (auto b : order) {
        auto d = decode_bitstring(enc, b);
        if (d.feasible) {
            return d;
        }
    }
    return std::nullopt;
}

} // namespace quav::qaoa
