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

#include <cstdint>
#include <vector>

#include "quav/qsim/state_vector.hpp"

namespace quav::qsim {

struct Coupling {
    int i{0};
    int j{0};
    double strength{0.0};
};

/**
 * @brief Ising-form observable sum_i c_i Z_i + sum J_ij Z_i Z_j.
 *
 * On basis state b, z_i(b) = +1 when bit i is 0 and -1 when it is 1.
 */
struct DiagonalObservable {
    std::vector<double> weights;
    std::vector<Coupling> couplings;

    [[nodiscard]] int num_qubits() const { return static_cast<int>(weights.size()); }

    /// @throws Error(IndexOutOfRange) or Error(InvalidArgument) for bad terms.
    void validate() const;

    /// Eigenvalue on one basis state.
    [[nodiscard]] double energy(std::uint64_t basis_state) const;
};

/// Eigenvalues for all 2^n basis states, built by bit doubling.
std::vector<double> energy_table(const DiagonalObservable &obs);

/// sum_b |a_b|^2 E(b). @throws Error(DimensionMismatch) on qubit mismatch.
double expectation_diagonal(const StateVector &s, const DiagonalObservable &obs);

} // namespace quav::qsim
