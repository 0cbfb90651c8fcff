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

#include <cstddef>
#include <vector>

#include "quav/qaoa/problem.hpp"
#include "quav/qsim/state_vector.hpp"

namespace quav::qaoa {

/**
 * @brief Gate list for the k-layer ansatz.
 *
 * H on every qubit, then per layer p: Rz(-2 gamma_p c_i) on each qubit,
 * CNOT(i-1, i) Rz_i(-2 gamma_p J_i) CNOT(i-1, i) on each consecutive pair,
 * and Rx(2 beta_p) on each qubit. Pairs with zero coupling still emit their
 * three gates, so the length is always circuit_gate_count(n, k).
 */
std::vector<qsim::Gate> build_circuit(const QaoaProblem &p, const QaoaParams &params);

/// n + k (2n + 3(n - 1)).
constexpr std::size_t circuit_gate_count(std::size_t n, std::size_t k) {
    return n + k * (2 * n + 3 * (n - 1));
}

} // namespace quav::qaoa
