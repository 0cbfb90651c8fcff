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
#include "quav/qaoa/adam.hpp"

#include <cmath>

#include "quav/error.hpp"

namespace quav::qaoa {

void adam_step(std::vector<double> &params, std::span<const double> grad, AdamState &state,
               const AdamConfig &cfg) {
    const std::size_t d = params.size();
    if (state.m.empty() && state.v.empty() && state.t == 0) {
        state.m.assign(d, 0.0);
        state.v.assign(d, 0.0);
    }
    if (grad.size() != d || state.m.size() != d || state.v.size() != d) {
        throw Error(ErrorCode::DimensionMismatch, "adam parameter, gradient and state sizes differ");
    }
    ++state.t;
    const double c1 = 1.0 - std::pow(cfg.beta1, state.t);
    const double c2 = 1.0 - std::pow(cfg.beta2, state.t);
    for (std::size_t i = 0; i < d; ++i) {
        state.m[i] = cfg.beta1 * state.m[i] + (1.0 - cfg.beta1) * grad[i];
        state.v[i] = cfg.beta2 * state.v[i] + (1.0 - cfg.beta2) * grad[i] * grad[i];
        const double m_hat = state.m[i] / c1;
        const double v_hat = state.v[i] / c2;
        params[i] -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
    }
}

} // namespace quav::qaoa
