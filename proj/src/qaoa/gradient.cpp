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
#include "quav/qaoa/gradient.hpp"

#include <numbers>

namespace quav::qaoa {

std::vector<double> parameter_shift_grad(const Evolution &ev, const QaoaParams &params,
                                         const ShiftOptions &opts) {
    params.validate();
    const QaoaProblem &p = ev.problem();
    const int n = ev.num_qubits();
    const int k = params.layers();
    std::vector<double> grad(static_cast<std::size_t>(2 * k), 0.0);
    std::uint64_t evaluation = 0;

    auto shifted_diff = [&](Insertion ins) {
        ins.angle = std::numbers::pi / 2.0;
        const auto plus = ev.state(params, &ins);
        ins.angle = -std::numbers::pi / 2.0;
        const auto minus = ev.state(params, &ins);
        if (opts.shots == 0) {
            return 0.5 * (ev.expectation(plus) - ev.expectation(minus));
        }
        const std::uint64_t s0 = opts.seed + 0x9E3779B97F4A7C15ULL * ++evaluation;
        const std::uint64_t s1 = opts.seed + 0x9E3779B97F4A7C15ULL * ++evaluation;
        return 0.5 * (ev.sampled_expectation(plus, opts.shots, s0) -
                      ev.sampled_expectation(minus, opts.shots, s1));
    };

    for (int layer = 0; layer < k; ++layer) {
        double dg = 0.0;
        for (int q = 0; q < n; ++q) {
            const double c = p.costs.normalized[static_cast<std::size_t>(q)];
            if (c != 0.0) {
                dg += -2.0 * c * shifted_diff({Insertion::Kind::Z, layer, q, 0.0});
            }
        }
        for (int q = 1; q < n; ++q) {
            const double j = p.couplings[static_cast<std::size_t>(q - 1)];
            if (j != 0.0) {
                dg += -2.0 * j * shifted_diff({Insertion::Kind::ZZ, layer, q, 0.0});
            }
        }
        double db = 0.0;
        for (int q = 0; q < n; ++q) {
            db += 2.0 * shifted_diff({Insertion::Kind::X, layer, q, 0.0});
        }
        grad[static_cast<std::size_t>(layer)] = dg;
        grad[static_cast<std::size_t>(k + layer)] = db;
    }
    return grad;
}

std::vector<double> parameter_shift_grad(const QaoaProblem &p, const QaoaParams &params,
                                         const ShiftOptions &opts) {
    return parameter_shift_grad(Evolution(p), params, opts);
}

} // namespace quav::qaoa
