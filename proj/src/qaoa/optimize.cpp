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
#include "quav/qaoa/optimize.hpp"

#include <cmath>

#include "quav/error.hpp"
#include "quav/qaoa/adam.hpp"
#include "quav/qaoa/gradient.hpp"
#include "quav/random.hpp"

namespace quav::qaoa {

QaoaParams random_initial_params(int layers, std::uint64_t seed, double range) {
    QaoaParams p = QaoaParams::zeros(layers);
    Rng rng(seed);
    for (auto &g : p.gammas) {
        g = rng.uniform(-range, range);
    }
    for (auto &b : p.betas) {
        b = rng.uniform(-range, range);
    }
    return p;
}

OptimizeResult optimize(const Evolution &ev, const OptimizeOptions &opts) {
    if (opts.steps < 1) {
        throw Error(ErrorCode::InvalidArgument, "steps must be >= 1");
    }
    if (!(opts.learning_rate > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "learning rate must be > 0");
    }
    QaoaParams current = random_initial_params(opts.layers, opts.seed, opts.init_range);
    std::vector<double> theta = current.flat();
    AdamState adam;
    const AdamConfig cfg{.learning_rate = opts.learning_rate};

    OptimizeResult result;
    result.best_loss = INFINITY;
    std::vector<double> grad;
    for (int step = 0; step < opts.steps; ++step) {
        current = QaoaParams::from_flat(theta);
        double loss = 0.0;
        if (opts.shots == 0 && opts.gradient == GradientMethod::Adjoint) {
            loss = ev.loss_and_gradient(current, grad);
        } else {
            const std::uint64_t step_seed = opts.seed * 1000003ULL + static_cast<std::uint64_t>(step);
            loss = opts.shots == 0
                       ? ev.loss(current)
                       : ev.sampled_expectation(ev.state(current), opts.shots, step_seed);
            grad = parameter_shift_grad(ev, current, {opts.shots, step_seed ^ 0x5DEECE66DULL});
        }
        if (loss < result.best_loss) {
            result.best_loss = loss;
            result.best_params = current;
        }
        result.trace.loss.push_back(loss);
        result.trace.best_loss.push_back(result.best_loss);
        result.trace.params.push_back(current);
        adam_step(theta, grad, adam, cfg);
    }
    return result;
}

OptimizeResult optimize(const QaoaProblem &p, const OptimizeOptions &opts) {
    return optimize(Evolution(p), opts);
}

} // namespace quav::qaoa
