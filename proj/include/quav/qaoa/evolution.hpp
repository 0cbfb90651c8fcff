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
/**
 * @file
 * Layer-fused QAOA simulation.
 *
 * The cost block of a layer is one diagonal phase exp(-i gamma H); the
 * mixer block is one cache-blocked Rx sweep. Both are exactly the unitaries
 * of the gate list from build_circuit, applied without the per-gate passes.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "quav/qaoa/problem.hpp"
#include "quav/qsim/state_vector.hpp"

namespace quav::qaoa {

/// One extra rotation placed right after a layer's cost or mixer block.
struct Insertion {
    enum class Kind { Z, ZZ, X };
    Kind kind{Kind::Z};
    int layer{0};
    /// Target qubit; for ZZ the pair is (qubit - 1, qubit).
    int qubit{0};
    double angle{0.0};
};

class Evolution {
  public:
    /// @throws Error(TooManyQubits) for more than 24 qubits.
    explicit Evolution(const QaoaProblem &p);

    [[nodiscard]] int num_qubits() const { return n_; }
    [[nodiscard]] const QaoaProblem &problem() const { return problem_; }

    /// Eigenvalues of H indexed by basis state.
    [[nodiscard]] const std::vector<double> &energies() const { return energies_; }
    [[nodiscard]] double ground_energy() const;

    /// Final state; @p extra, if given, is applied inside its layer.
    [[nodiscard]] qsim::StateVector state(const QaoaParams &params,
                                          const Insertion *extra = nullptr) const;

    [[nodiscard]] double expectation(const qsim::StateVector &s) const;

    /// Sample mean of the eigenvalue over @p shots measurements.
    [[nodiscard]] double sampled_expectation(const qsim::StateVector &s, std::size_t shots,
                                             std::uint64_t seed) const;

    [[nodiscard]] double loss(const QaoaParams &params) const { return expectation(state(params)); }

    /// Exact loss and its gradient (gammas then betas) by reverse-mode
    /// propagation through the layers.
    double loss_and_gradient(const QaoaParams &params, std::vector<double> &grad) const;

    /// exp(-i gamma H) in place.
    void apply_cost(qsim::StateVector &s, double gamma) const;

  private:
    // Applies exp(-i gamma H) to a (and b if given); returns Im <a|H|b>
    // taken before the phase, or 0 without b.
    double cost_sweep(qsim::StateVector &a, qsim::StateVector *b, double gamma) const;
    void apply_insertion(qsim::StateVector &s, const Insertion &ins) const;

    QaoaProblem problem_;
    int n_;
    int lo_bits_;
    std::vector<double> energies_;
    // H(b) = lo_energy_[variant(b_hi)][b_lo] + hi_energy_[b_hi]; the variant
    // holds the high qubits of couplings that straddle the split.
    std::vector<int> cross_qubits_;
    std::vector<std::vector<double>> lo_energy_;
    std::vector<double> hi_energy_;
};

/**
 * @brief <H> at @p params; exact for shots == 0, otherwise a seeded
 * sample-mean estimate.
 * @throws Error(TooManyQubits) for more than 24 qubits.
 */
double evaluate_loss(const QaoaProblem &p, const QaoaParams &params, std::size_t shots = 0,
                     std::uint64_t seed = 0);

} // namespace quav::qaoa
