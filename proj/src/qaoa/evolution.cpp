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
#include "quav/qaoa/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quav/error.hpp"
#include "quav/qsim/blocked.hpp"
#include "quav/qsim/observable.hpp"
#include "quav/qsim/sampling.hpp"

namespace quav::qaoa {

using qsim::Complex;
using qsim::StateVector;

namespace {

constexpr int kDirectTableBits = 12;
constexpr std::size_t kMaxCrossQubits = 6;

inline double zsign(std::size_t b, int q) { return ((b >> q) & 1U) != 0 ? -1.0 : 1.0; }

} // namespace

Evolution::Evolution(const QaoaProblem &p) : problem_(p), n_(p.num_qubits()) {
    if (n_ > qsim::kMaxQubits) {
        throw Error(ErrorCode::TooManyQubits, std::to_string(n_) + " qubits exceed the limit of " +
                                                  std::to_string(qsim::kMaxQubits));
    }
    const auto obs = to_observable(problem_);
    energies_ = qsim::energy_table(obs);

    lo_bits_ = n_ <= kDirectTableBits ? n_ : n_ / 2;
    for (const auto &c : obs.couplings) {
        const int lo = std::min(c.i, c.j);
        const int hi = std::max(c.i, c.j);
        if (lo < lo_bits_ && hi >= lo_bits_ &&
            std::find(cross_qubits_.begin(), cross_qubits_.end(), hi) == cross_qubits_.end()) {
            cross_qubits_.push_back(hi);
        }
    }
    if (cross_qubits_.size() > kMaxCrossQubits) {
        lo_bits_ = n_;
        cross_qubits_.clear();
    }

    const std::size_t lo_size = std::size_t{1} << lo_bits_;
    const std::size_t hi_size = std::size_t{1} << (n_ - lo_bits_);
    const std::size_t variants = std::size_t{1} << cross_qubits_.size();
    lo_energy_.assign(variants, std::vector<double>(lo_size, 0.0));
    hi_energy_.assign(hi_size, 0.0);

    for (std::size_t v = 0; v < variants; ++v) {
        // A representative full index carrying this variant's high bits.
        std::size_t high_bits = 0;
        for (std::size_t k = 0; k < cross_qubits_.size(); ++k) {
            if (((v >> k) & 1U) != 0) {
                high_bits |= std::size_t{1} << cross_qubits_[k];
            }
        }
        for (std::size_t b = 0; b < lo_size; ++b) {
            const std::size_t full = b | high_bits;
            double e = 0.0;
            for (int q = 0; q < lo_bits_; ++q) {
                e += obs.weights[static_cast<std::size_t>(q)] * zsign(full, q);
            }
            for (const auto &c : obs.couplings) {
                if (std::min(c.i, c.j) < lo_bits_) {
                    e += c.strength * zsign(full, c.i) * zsign(full, c.j);
                }
            }
            lo_energy_[v][b] = e;
        }
    }
    for (std::size_t h = 0; h < hi_size; ++h) {
        const std::size_t full = h << lo_bits_;
        double e = 0.0;
        for (int q = lo_bits_; q < n_; ++q) {
            e += obs.weights[static_cast<std::size_t>(q)] * zsign(full, q);
        }
        for (const auto &c : obs.couplings) {
            if (std::min(c.i, c.j) >= lo_bits_) {
                e += c.strength * zsign(full, c.i) * zsign(full, c.j);
            }
        }
        hi_energy_[h] = e;
    }
}

double Evolution::ground_energy() const {
    return *std::min_element(energies_.begin(), energies_.end());
}

void Evolution::apply_cost(StateVector &s, double gamma) const {
    cost_sweep(s, nullptr, gamma);
}

double Evolution::cost_sweep(StateVector &a, StateVector *b, double gamma) const {
    const std::size_t lo_size = std::size_t{1} << lo_bits_;
    std::vector<std::vector<Complex>> lo_phase(lo_energy_.size(), std::vector<Complex>(lo_size));
    for (std::size_t v = 0; v < lo_energy_.size(); ++v) {
        for (std::size_t i = 0; i < lo_size; ++i) {
            lo_phase[v][i] = std::polar(1.0, -gamma * lo_energy_[v][i]);
        }
    }
    auto *da = reinterpret_cast<double *>(a.amplitudes().data());
    auto *db = b != nullptr ? reinterpret_cast<double *>(b->amplitudes().data()) : nullptr;
    double overlap = 0.0;
    for (std::size_t h = 0; h < hi_energy_.size(); ++h) {
        std::size_t v = 0;
        for (std::size_t k = 0; k < cross_qubits_.size(); ++k) {
            v |= ((h >> (cross_qubits_[k] - lo_bits_)) & 1U) << k;
        }
        const Complex row = std::polar(1.0, -gamma * hi_energy_[h]);
        const double rr = row.real(), ri = row.imag();
        const auto *t = reinterpret_cast<const double *>(lo_phase[v].data());
        double *__restrict pa = da + 2 * h * lo_size;
        if (db == nullptr) {
            for (std::size_t w = 0; w < 2 * lo_size; w += 2) {
                const double pr = rr * t[w] - ri * t[w + 1];
                const double pi = rr * t[w + 1] + ri * t[w];
                const double ar = pa[w], ai = pa[w + 1];
                pa[w] = ar * pr - ai * pi;
                pa[w + 1] = ar * pi + ai * pr;
            }
            continue;
        }
        double *__restrict pb = db + 2 * h * lo_size;
        const double *le = lo_energy_[v].data();
        const double he = hi_energy_[h];
        double acc = 0.0;
#pragma omp simd reduction(+ : acc)
        for (std::size_t w = 0; w < 2 * lo_size; w += 2) {
            const double pr = rr * t[w] - ri * t[w + 1];
            const double pi = rr * t[w + 1] + ri * t[w];
            const double ar = pa[w], ai = pa[w + 1];
            const double br = pb[w], bi = pb[w + 1];
            // Im(conj(a) E b)
            acc += (le[w / 2] + he) * (ar * bi - ai * br);
            pa[w] = ar * pr - ai * pi;
            pa[w + 1] = ar * pi + ai * pr;
            pb[w] = br * pr - bi * pi;
            pb[w + 1] = br * pi + bi * pr;
        }
        overlap += acc;
    }
    return overlap;
}

void Evolution::apply_insertion(StateVector &s, const Insertion &ins) const {
    switch (ins.kind) {
    case Insertion::Kind::Z:
        qsim::apply_gate(s, qsim::Gate::rz(ins.qubit, ins.angle));
        break;
    case Insertion::Kind::X:
        qsim::apply_gate(s, qsim::Gate::rx(ins.qubit, ins.angle));
        break;
    case Insertion::Kind::ZZ: {
        if (ins.qubit < 1 || ins.qubit >= n_) {
            throw Error(ErrorCode::IndexOutOfRange, "ZZ insertion needs 1 <= qubit < n");
        }
        const Complex same = std::polar(1.0, -0.5 * ins.angle);
        const Complex differ = std::polar(1.0, 0.5 * ins.angle);
        auto amps = s.amplitudes();
        for (std::size_t b = 0; b < amps.size(); ++b) {
            const bool a = ((b >> (ins.qubit - 1)) & 1U) != 0;
            const bool c = ((b >> ins.qubit) & 1U) != 0;
            amps[b] *= a == c ? same : differ;
        }
        break;
    }
    }
}

StateVector Evolution::state(const QaoaParams &params, const Insertion *extra) const {
    params.validate();
    StateVector s = qsim::init_plus_state(n_);
    for (int layer = 0; layer < params.layers(); ++layer) {
        apply_cost(s, params.gammas[static_cast<std::size_t>(layer)]);
        const bool here = extra != nullptr && extra->layer == layer;
        if (here && extra->kind != Insertion::Kind::X) {
            apply_insertion(s, *extra);
        }
        qsim::apply_rx_layer(s, 2.0 * params.betas[static_cast<std::size_t>(layer)]);
        if (here && extra->kind == Insertion::Kind::X) {
            apply_insertion(s, *extra);
        }
    }
    return s;
}

double Evolution::expectation(const StateVector &s) const {
    if (s.num_qubits() != n_) {
        throw Error(ErrorCode::DimensionMismatch, "state and problem qubit counts differ");
    }
    const auto amps = s.amplitudes();
    double total = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        total += std::norm(amps[b]) * energies_[b];
    }
    return total;
}

double Evolution::sampled_expectation(const StateVector &s, std::size_t shots,
                                      std::uint64_t seed) const {
    const auto samples = qsim::sample_bitstrings(s, shots, seed);
    double total = 0.0;
    for (auto b : samples) {
        total += energies_[b];
    }
    return total / static_cast<double>(samples.size());
}

double Evolution::loss_and_gradient(const QaoaParams &params, std::vector<double> &grad) const {
    const int k = params.layers();
    StateVector psi = state(params);
    StateVector lambda = psi;
    double loss = 0.0;
    {
        auto l = lambda.amplitudes();
        for (std::size_t b = 0; b < l.size(); ++b) {
            loss += std::norm(l[b]) * energies_[b];
            l[b] *= energies_[b];
        }
    }

    // Walking back through the layers, the generator overlaps are read off
    // the same sweeps that undo each block on both states.
    grad.assign(static_cast<std::size_t>(2 * k), 0.0);
    for (int layer = k - 1; layer >= 0; --layer) {
        const auto idx = static_cast<std::size_t>(layer);
        const Complex x = qsim::apply_rx_layer_pair(lambda, psi, -2.0 * params.betas[idx]);
        grad[static_cast<std::size_t>(k) + idx] = 2.0 * x.imag();
        grad[idx] = 2.0 * cost_sweep(lambda, &psi, -params.gammas[idx]);
    }
    return loss;
}

double evaluate_loss(const QaoaProblem &p, const QaoaParams &params, std::size_t shots,
                     std::uint64_t seed) {
    const Evolution ev(p);
    const StateVector s = ev.state(params);
    return shots == 0 ? ev.expectation(s) : ev.sampled_expectation(s, shots, seed);
}

} // namespace quav::qaoa
