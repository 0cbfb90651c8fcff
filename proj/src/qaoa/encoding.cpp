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
#include "quav/qaoa/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quav/error.hpp"
#include "quav/graphplan/segmentation.hpp"

namespace quav::qaoa {

using geo::Point2;

std::string_view to_string(EncodingMode mode) {
    return mode == EncodingMode::Segment ? "segment" : "select";
}

EncodingMode parse_encoding(std::string_view name) {
    if (name == "segment") {
        return EncodingMode::Segment;
    }
    if (name == "select") {
        return EncodingMode::Select;
    }
    throw Error(ErrorCode::InvalidArgument,
                "unknown encoding '" + std::string(name) + "' (segment|select)");
}

EncodedProblem encode_segment(const Point2 &start, const Point2 &end, int qubits,
                              std::span<const geo::ObstaclePolygon> obstacles,
                              const cost::CostConfig &cfg, double coupling) {
    const auto seg = graphplan::segment_straight_path(start, end, qubits);
    auto assigned = cost::assign_costs(seg.edges, obstacles, cfg);
    EncodedProblem out;
    out.mode = EncodingMode::Segment;
    out.start = start;
    out.end = end;
    out.edges = seg.edges;
    out.assessments = std::move(assigned.edges);
    out.problem = QaoaProblem::chain(std::move(assigned.costs), coupling);
    return out;
}

namespace {

constexpr int kLanes = 3;
constexpr int kMaxColumns = 9;

struct LatticeEdge {
    int from;
    int to;
    double raw;
    cost::EdgeAssessment assessment;
};

// Node ids: 0 = start, 1 + 3 (c - 1) + lane for column c in [1, m), last = end.
int lattice_node(int column, int lane, int columns) {
    if (column == 0) {
        return 0;
    }
    if (column == columns) {
        return 1 + kLanes * (columns - 1);
    }
    return 1 + kLanes * (column - 1) + lane;
}

} // namespace

EncodedProblem encode_select(const Point2 &start, const Point2 &end, int qubits,
                             std::span<const geo::ObstaclePolygon> obstacles,
                             const cost::CostConfig &cfg, double coupling,
                             const SelectOptions &opts) {
    if (qubits < 1) {
        throw Error(ErrorCode::InvalidArgument, "qubits must be >= 1");
    }
    cfg.validate();
    const double dist = geo::distance(start, end);
    if (dist == 0.0) {
        throw Error(ErrorCode::ZeroDistance, "start and end coincide");
    }

    int columns = opts.columns;
    if (columns == 0) {
        columns = 2;
        while (6 + 9 * (columns - 2) < qubits && columns < kMaxColumns) {
            ++columns;
        }
        columns = std::min(columns + 1, kMaxColumns);
    }
    if (columns < 2 || columns > kMaxColumns) {
        throw Error(ErrorCode::InvalidArgument, "select lattice needs 2..9 columns");
    }
    const double du = dist / columns;
    const double lane = opts.lane_spacing > 0.0 ? opts.lane_spacing : du;
    const Point2 u = (end - start) * (1.0 / dist);
    const Point2 v{-u.y, u.x};

    std::vector<Point2> nodes(static_cast<std::size_t>(2 + kLanes * (columns - 1)));
    nodes.front() = start;
    nodes.back() = end;
    for (int c = 1; c < columns; ++c) {
        for (int l = 0; l < kLanes; ++l) {
            nodes[static_cast<std::size_t>(lattice_node(c, l, columns))] =
                start + u * (c * du) + v * ((l - 1) * lane);
        }
    }

    // Forward edges between adjacent columns whose lanes differ by at most one.
    std::vector<LatticeEdge> lattice;
    cost::CostConfig no_bias = cfg;
    no_bias.start_bias = 0.0;
    for (int c = 0; c < columns; ++c) {
        const int from_lanes = c == 0 ? 1 : kLanes;
        const int to_lanes = c + 1 == columns ? 1 : kLanes;
        for (int a = 0; a < from_lanes; ++a) {
            for (int b = 0; b < to_lanes; ++b) {
                const int la = c == 0 ? 1 : a;
                const int lb = c + 1 == columns ? 1 : b;
                if (std::abs(la - lb) > 1) {
                    continue;
                }
                const int from = lattice_node(c, a, columns);
                const int to = lattice_node(c + 1, b, columns);
                const geo::Segment seg{nodes[static_cast<std::size_t>(from)],
                                       nodes[static_cast<std::size_t>(to)]};
                const auto costed =
                    cost::assign_costs(std::span(&seg, 1), obstacles, c == 0 ? cfg : no_bias);
                lattice.push_back({from, to, costed.costs.raw[0], costed.edges[0]});
            }
        }
    }

    auto edge_between = [&](int from, int to) {
        for (std::size_t e = 0; e < lattice.size(); ++e) {
            if (lattice[e].from == from && lattice[e].to == to) {
                return static_cast<int>(e);
            }
        }
        return -1;
    };

    // Every lane sequence through the interior columns.
    struct LatticePath {
        std::vector<int> edges;
        double cost;
    };
    std::vector<LatticePath> paths;
    std::vector<int> lanes(static_cast<std::size_t>(columns - 1), 0);
    auto emit = [&]() {
        LatticePath p{{}, 0.0};
        int prev = 0;
        int prev_lane = 1;
        for (int c = 1; c <= columns; ++c) {
            const int l = c == columns ? 1 : lanes[static_cast<std::size_t>(c - 1)];
            if (std::abs(l - prev_lane) > 1) {
                return;
            }
            const int node = lattice_node(c, l, columns);
            const int e = edge_between(prev, node);
            p.edges.push_back(e);
            p.cost += lattice[static_cast<std::size_t>(e)].raw;
            prev = node;
            prev_lane = l;
        }
        paths.push_back(std::move(p));
    };
    for (;;) {
        emit();
        std::size_t k = 0;
        while (k < lanes.size() && ++lanes[k] == kLanes) {
            lanes[k++] = 0;
        }
        if (k == lanes.size()) {
            break;
        }
    }
    std::stable_sort(paths.begin(), paths.end(), [](const LatticePath &a, const LatticePath &b) {
        if (a.cost != b.cost) {
            return a.cost < b.cost;
        }
        return a.edges < b.edges;
    });

    std::vector<bool> chosen(lattice.size(), false);
    int used = 0;
    for (const auto &p : paths) {
        int fresh = 0;
        for (int e : p.edges) {
            fresh += chosen[static_cast<std::size_t>(e)] ? 0 : 1;
        }
        if (used + fresh > qubits) {
            continue;
        }
        for (int e : p.edges) {
            chosen[static_cast<std::size_t>(e)] = true;
        }
        used += fresh;
        if (used == qubits) {
            break;
        }
    }

    EncodedProblem out;
    out.mode = EncodingMode::Select;
    out.start = start;
    out.end = end;
    std::vector<double> raw;
    std::vector<std::pair<int, int>> ends;
    for (std::size_t e = 0; e < lattice.size(); ++e) {
        if (!chosen[e]) {
            continue;
        }
        const auto &le = lattice[e];
        out.edges.push_back({nodes[static_cast<std::size_t>(le.from)],
                             nodes[static_cast<std::size_t>(le.to)]});
        out.assessments.push_back(le.assessment);
        raw.push_back(le.raw);
        ends.emplace_back(le.from, le.to);
    }
    if (raw.empty()) {
        throw Error(ErrorCode::InvalidArgument,
                    "qubit budget too small for any lattice path (need >= " +
                        std::to_string(columns) + ")");
    }
    out.problem.costs = cost::normalize(std::move(raw));
    for (std::size_t i = 1; i < ends.size(); ++i) {
        const auto [a0, b0] = ends[i - 1];
        const auto [a1, b1] = ends[i];
        const bool share = a0 == a1 || a0 == b1 || b0 == a1 || b0 == b1;
        out.problem.couplings.push_back(share ? coupling : 0.0);
    }
    out.problem.validate();
    return out;
}

} // namespace quav::qaoa
