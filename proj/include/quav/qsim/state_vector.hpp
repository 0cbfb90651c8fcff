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
 * Dense statevector and the H / Rx / Rz / CNOT gate set.
 *
 * Qubit q is bit q of the basis-state index (qubit 0 is the least
 * significant bit). Rotations follow R_P(theta) = exp(-i theta P / 2).
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace quav::qsim {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 24;

enum class GateKind { H, Rx, Rz, CNOT };

struct Gate {
    GateKind kind{GateKind::H};
    int target{0};
    int control{-1};
    double angle{0.0};

    static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
    static Gate rx(int q, double theta) { return {GateKind::Rx, q, -1, theta}; }
    static Gate rz(int q, double theta) { return {GateKind::Rz, q, -1, theta}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control, 0.0}; }

    [[nodiscard]] bool parametric() const {
        return kind == GateKind::Rx || kind == GateKind::Rz;
    }
};

class StateVector {
  public:
    /// |0...0> on n qubits. @throws Error(TooManyQubits) unless 1 <= n <= 24.
    explicit StateVector(int num_qubits);

    /// Takes ownership of amplitudes; size must be a power of two.
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] int num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] std::span<Complex> amplitudes() { return amps_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] Complex &operator[](std::size_t i) { return amps_[i]; }

    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] std::vector<double> probabilities() const;

  private:
    int num_qubits_;
    std::vector<Complex> amps_;
};

/// H on every qubit of |0...0>: all amplitudes 2^{-n/2}.
StateVector init_plus_state(int num_qubits);

/// @throws Error(IndexOutOfRange) for bad qubit indices or control == target.
StateVector &apply_gate(StateVector &s, const Gate &g);

StateVector &apply_circuit(StateVector &s, std::span<const Gate> gates);

/// Rx(theta) on every qubit, cache-blocked so the whole layer costs about two
/// sweeps over memory instead of one per qubit.
void apply_rx_layer(StateVector &s, double theta);

/**
 * @brief Rx(theta) layer on both states, returning sum_q <l| X_q |r>
 * evaluated before the rotation (the overlap is invariant under it).
 * @throws Error(DimensionMismatch) for different qubit counts.
 */
Complex apply_rx_layer_pair(StateVector &l, StateVector &r, double theta);

/// Elementwise multiply by a diagonal of the same size.
void apply_diagonal(StateVector &s, std::span<const Complex> diagonal);

/// <a|b>.
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

} // namespace quav::qsim
