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

enum class GradientMethod { Adjoint, ParameterShift };

struct OptimizeOptions {
    int layers{5};
    int steps{60};
    double learning_rate{0.1};
    std::uint64_t seed{0};
    /// 0 optimizes the exact expectation; otherwise losses and shift-rule
    /// gradients are shot estimates.
    std::size_t shots{0};
    GradientMethod gradient{GradientMethod::Adjoint};
    double init_range{0.1};
};

/// Entry s describes the parameters before update s.
struct LossTrace {
    std::vector<double> loss;
    std::vector<double> best_loss;
    std::vector<QaoaParams> params;

    [[nodiscard]] std::size_t size() const { return loss.size(); }
};

struct OptimizeResult {
    QaoaParams best_params;
    double best_loss{0.0};
    LossTrace trace;
};

/// Gammas then betas, each uniform in [-range, range].
QaoaParams random_initial_params(int layers, std::uint64_t seed, double range = 0.1);

/**
 * @brief Adam descent on <H>; returns the best parameters seen.
 * @throws Error(InvalidArgument) for steps < 1, layers < 1 or lr <= 0.
 */
OptimizeResult optimize(const Evolution &ev, const OptimizeOptions &opts);

OptimizeResult optimize(const QaoaProblem &p, const OptimizeOptions &opts);

} // namespace quav::qaoa
