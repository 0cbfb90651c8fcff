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
#include "quav/qaoa/problem.hpp"

#include <cmath>
#include <string>

#include "quav/error.hpp"

namespace quav::qaoa {

void QaoaParams::validate() const {
    if (gammas.empty() || gammas.size() != betas.size()) {
        throw Error(ErrorCode::InvalidArgument,
                    "need equal, non-zero gamma and beta counts (got " +
                        std::to_string(gammas.size()) + " and " + std::to_string(betas.size()) +
                        ")");
    }
}

std::vector<double> QaoaParams::flat() const {
    std::vector<double> out(gammas);
    out.insert(out.end(), betas.begin(), betas.end());
    return out;
}

QaoaParams QaoaParams::from_flat(std::span<const double> values) {
    if (values.empty() || values.size() % 2 != 0) {
        throw Error(ErrorCode::DimensionMismatch, "flat parameter vector must have even length");
    }
    const std::size_t k = values.size() / 2;
    QaoaParams p;
    p.gammas.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k));
    p.betas.assign(values.begin() + static_cast<std::ptrdiff_t>(k), values.end());
    return p;
}

QaoaParams QaoaParams::zeros(int layers) {
    if (layers < 1) {
        throw Error(ErrorCode::InvalidArgument, "layers must be >= 1");
    }
    const auto k = static_cast<std::size_t>(layers);
    return {std::vector<double>(k, 0.0), std::vector<double>(k, 0.0)};
}

void QaoaProblem::validate() const {
    const int n = num_qubits();
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "problem has no qubits");
    }
    if (costs.normalized.size() != costs.raw.size()) {
        throw Error(ErrorCode::DimensionMismatch, "raw and normalized cost sizes differ");
    }
    if (couplings.size() != static_cast<std::size_t>(n - 1)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(n - 1) + " couplings, got " +
                        std::to_string(couplings.size()));
    }
    for (double j : couplings) {
        if (!(j >= 0.0) || !std::isfinite(j)) {
            throw Error(ErrorCode::InvalidArgument, "couplings must be finite and >= 0");
        }
    }
}

QaoaProblem QaoaProblem::chain(cost::CostVector costs, double coupling) {
    QaoaProblem p;
    const std::size_t n = costs.size();
    p.costs = std::move(costs);
    p.couplings.assign(n > 0 ? n - 1 : 0, coupling);
    p.validate();
    return p;
}

qsim::DiagonalObservable to_observable(const QaoaProblem &p) {
    p.validate();
    qsim::DiagonalObservable obs;
    obs.weights.reserve(p.costs.size());
    for (double c : p.costs.normalized) {
        obs.weights.push_back(-c);
    }
    for (std::size_t i = 1; i < p.costs.size(); ++i) {
        if (p.couplings[i - 1] != 0.0) {
            obs.couplings.push_back(
                {static_cast<int>(i - 1), static_cast<int>(i), -p.couplings[i - 1]});
        }
    }
    return obs;
}

double selection_cost(const QaoaProblem &p, std::uint64_t bits) {
    double total = 0.0;
    const std::size_t n = p.costs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const bool on = ((bits >> i) & 1U) != 0;
        if (on) {
            total += p.costs.raw[i];
        }
        if (i > 0 && on != (((bits >> (i - 1)) & 1U) != 0)) {
            total += p.couplings[i - 1] * p.costs.scale;
        }
    }
    return total;
}

} // namespace quav::qaoa
