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
#include "quav/qaoa/circuit.hpp"

namespace quav::qaoa {

std::vector<qsim::Gate> build_circuit(const QaoaProblem &p, const QaoaParams &params) {
    p.validate();
    params.validate();
    using qsim::Gate;
    const int n = p.num_qubits();
    std::vector<Gate> gates;
    gates.reserve(circuit_gate_count(static_cast<std::size_t>(n),
                                     static_cast<std::size_t>(params.layers())));
    for (int q = 0; q < n; ++q) {
        gates.push_back(Gate::h(q));
    }
    for (int layer = 0; layer < params.layers(); ++layer) {
        const double gamma = params.gammas[static_cast<std::size_t>(layer)];
        const double beta = params.betas[static_cast<std::size_t>(layer)];
        for (int q = 0; q < n; ++q) {
            gates.push_back(Gate::rz(q, -2.0 * gamma * p.costs.normalized[static_cast<std::size_t>(q)]));
        }
        for (int q = 1; q < n; ++q) {
            const double j = p.couplings[static_cast<std::size_t>(q - 1)];
            gates.push_back(Gate::cnot(q - 1, q));
            gates.push_back(Gate::rz(q, -2.0 * gamma * j));
            gates.push_back(Gate::cnot(q - 1, q));
        }
        for (int q = 0; q < n; ++q) {
            gates.push_back(Gate::rx(q, 2.0 * beta));
        }
    }
    return gates;
}

} // namespace quav::qaoa
