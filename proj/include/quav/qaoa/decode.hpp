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
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quav/qaoa/encoding.hpp"
#include "quav/qsim/sampling.hpp"

namespace quav::qaoa {

struct RankedSample {
    qsim::Bitstring bits{0};
    std::string text;
    /// selection_cost in raw units.
    double cost{0.0};
    std::size_t count{0};
};

/// Distinct samples by ascending cost, ties by lexicographically smallest text.
std::vector<RankedSample> rank_samples(const QaoaProblem &p,
                                       std::span<const qsim::Bitstring> samples);

struct DecodedPath {
    qsim::Bitstring bits{0};
    std::string bitstring;
    /// Edge indices of the reconstructed chain, start to end.
    std::vector<int> selected;
    std::vector<geo::Point2> waypoints;
    /// Chain reaches the end and none of its edges hits an obstacle.
    bool feasible{false};
    /// selection_cost of the bitstring (raw units, with link penalties).
    double cost{0.0};
    /// Summed raw cost of the chain edges.
    double path_cost{0.0};
};

/**
 * @brief Rebuilds the cheapest chain of included edges leaving the start.
 * Without a chain to the end, the longest-reaching prefix is reported.
 */
DecodedPath decode_bitstring(const EncodedProblem &enc, qsim::Bitstring bits);

/**
 * @brief Best feasible sample by rank order.
 * @throws Error(InvalidArgument) with no samples, Error(NoFeasibleSample)
 * if none decodes to a feasible path.
 */
DecodedPath decode_path(const EncodedProblem &enc, std::span<const qsim::Bitstring> samples);

/**
 * @brief Exhaustive search for the cheapest feasible bitstring.
 * @throws Error(TooManyQubits) above 24 qubits.
 */
std::optional<DecodedPath> brute_force_optimum(const EncodedProblem &enc);

} // namespace quav::qaoa
