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
#include "quav/qsim/observable.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quav/error.hpp"

namespace quav::qsim {

void DiagonalObservable::validate() const {
    const int n = num_qubits();
    if (n < 1 || n > kMaxQubits) {
        throw Error(ErrorCode::TooManyQubits, "observable qubit count out of range");
    }
    for (double w : weights) {
        if (!std::isfinite(w)) {
            throw Error(ErrorCode::InvalidArgument, "non-finite Z weight");
        }
    }
    for (const auto &c : couplings) {
        if (c.i < 0 || c.j < 0 || c.i >= n || c.j >= n || c.i == c.j) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "coupling (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                            ") invalid");
        }
        if (!std::isfinite(c.strength)) {
            throw Error(ErrorCode::InvalidArgument, "non-finite ZZ coupling");
        }
    }
}

double DiagonalObservable::energy(std::uint64_t b) const {
    auto z = [b](int q) { return ((b >> q) & 1U) != 0 ? -1.0 : 1.0; };
    double e = 0.0;
    for (int q = 0; q < num_qubits(); ++q) {
        e += weights[static_cast<std::size_t>(q)] * z(q);
    }
    for (const auto &c : couplings) {
        e += c.strength * z(c.i) * z(c.j);
    }
    return e;
}

std::vector<double> energy_table(const DiagonalObservable &obs) {
    obs.validate();
    const int n = obs.num_qubits();
    std::vector<double> table(std::size_t{1} << n);

    // Setting bit q (all higher bits still 0) flips couplings whose higher
    // qubit is q, relative to the lower qubit's value, and couplings whose
    // lower qubit is q against a higher qubit at z = +1.
    std::vector<std::vector<std::pair<int, double>>> by_top(static_cast<std::size_t>(n));
    std::vector<double> by_low(static_cast<std::size_t>(n), 0.0);
    double e0 = 0.0;
    for (double w : obs.weights) {
        e0 += w;
    }
    for (const auto &c : obs.couplings) {
        e0 += c.strength;
        by_top[static_cast<std::size_t>(std::max(c.i, c.j))].emplace_back(std::min(c.i, c.j),
                                                                          c.strength);
        by_low[static_cast<std::size_t>(std::min(c.i, c.j))] += c.strength;
    }
    table[0] = e0;
    for (int q = 0; q < n; ++q) {
        const std::size_t half = std::size_t{1} << q;
        const double dw = -2.0 * (obs.weights[static_cast<std::size_t>(q)] +
                                  by_low[static_cast<std::size_t>(q)]);
        const auto &terms = by_top[static_cast<std::size_t>(q)];
        for (std::size_t b = 0; b < half; ++b) {
            double delta = dw;
            for (const auto &[lower, strength] : terms) {
                delta -= 2.0 * strength * (((b >> lower) & 1U) != 0 ? -1.0 : 1.0);
            }
            table[b | half] = table[b] + delta;
        }
    }
    return table;
}

double expectation_diagonal(const StateVector &s, const DiagonalObservable &obs) {
    if (obs.num_qubits() != s.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "observable and state qubit counts differ");
    }
    const auto table = energy_table(obs);
    double total = 0.0;
    const auto amps = s.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        total += std::norm(amps[b]) * table[b];
    }
    return total;
}

} // namespace quav::qsim
