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

#include "quav/qaoa/evolution.hpp"

namespace quav::qaoa {

struct ShiftOptions {
    /// 0 evaluates every shifted circuit exactly.
    std::size_t shots{0};
    std::uint64_t seed{0};
};

/**
 * @brief Gradient (gammas then betas) from the two-term shift rule.
 *
 * Every rotation gate is shifted by +-pi/2 on its own; each contribution
 * is scaled by d(angle)/d(parameter), i.e. -2 c_i or -2 J_i for the cost
 * gates and 2 for the mixer gates.
 */
std::vector<double> parameter_shift_grad(const Evolution &ev, const QaoaParams &params,
                                         const ShiftOptions &opts = {});

std::vector<double> parameter_shift_grad(const QaoaProblem &p, const QaoaParams &params,
                                         const ShiftOptions &opts = {});

} // namespace quav::qaoa
