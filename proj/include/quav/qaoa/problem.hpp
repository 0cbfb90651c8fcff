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
 * QAOA problem and parameter types.
 *
 * Bit value 1 means "edge included". With z = +1 for bit 0, the cost of a
 * selection, sum_{b_i = 1} c_i + J * (number of consecutive pairs whose bits
 * differ), equals a constant plus half the eigenvalue of
 *
 *   H = -sum_i c_i Z_i - sum_i J_i Z_{i-1} Z_i,
 *
 * so lowering <H> favours cheap, contiguous selections.
 */
#pragma once

#include <span>
#include <vector>

#include "quav/cost/cost.hpp"
#include "quav/qsim/observable.hpp"

namespace quav::qaoa {

struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    [[nodiscard]] int layers() const { return static_cast<int>(gammas.size()); }

    /// @throws Error(InvalidArgument) unless |gammas| = |betas| >= 1.
    void validate() const;

    /// Gammas followed by betas.
    [[nodiscard]] std::vector<double> flat() const;
    static QaoaParams from_flat(std::span<const double> values);
    static QaoaParams zeros(int layers);
};

struct QaoaProblem {
    cost::CostVector costs;
    /// couplings[i - 1] joins qubits i - 1 and i (normalized units, >= 0).
    std::vector<double> couplings;

    [[nodiscard]] int num_qubits() const { return static_cast<int>(costs.size()); }

    /// @throws Error(InvalidArgument) on size mismatch or a negative coupling.
    void validate() const;

    /// Uniform coupling on every consecutive pair.
    static QaoaProblem chain(cost::CostVector costs, double coupling);
};

/// The diagonal operator H whose expectation is the QAOA loss.
qsim::DiagonalObservable to_observable(const QaoaProblem &p);

/**
 * @brief Raw-unit cost of a selection: included raw costs plus
 * couplings[i] * scale for every consecutive pair with differing bits.
 */
double selection_cost(const QaoaProblem &p, std::uint64_t bits);

} // namespace quav::qaoa
