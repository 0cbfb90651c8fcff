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
#include "quav/qsim/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "quav/error.hpp"
#include "quav/qsim/blocked.hpp"

namespace quav::qsim {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw Error(ErrorCode::TooManyQubits,
                    "qubit count " + std::to_string(n) + " outside 1.." +
                        std::to_string(kMaxQubits));
    }
}

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "qubit " + std::to_string(q) + " outside 0.." + std::to_string(n - 1));
    }
}

// Visits every amplitude pair (i, i + stride) whose lower index has the
// target bit clear.
template <class PairOp>
void for_each_pair(std::span<Complex> amps, int target, PairOp &&op) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t n = amps.size();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            op(amps[i], amps[i + stride]);
        }
    }
}

// In-place Rx on a pair of amplitudes, written out in real arithmetic.
inline void rx_pair(Complex &a, Complex &b, double c, double s) {
    const double ar = a.real(), ai = a.imag(), br = b.real(), bi = b.imag();
    a = {c * ar + s * bi, c * ai - s * br};
    b = {c * br + s * ai, c * bi - s * ar};
}

} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw Error(ErrorCode::DimensionMismatch, "amplitude count is not 2^n");
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(),
                   [](const Complex &a) { return std::norm(a); });
    return p;
}

StateVector init_plus_state(int num_qubits) {
    check_qubit_count(num_qubits);
    const double amp = std::pow(2.0, -0.5 * num_qubits);
    return StateVector(num_qubits,
                       std::vector<Complex>(std::size_t{1} << num_qubits, Complex{amp, 0.0}));
}

StateVector &apply_gate(StateVector &s, const Gate &g) {
    const int n = s.num_qubits();
    check_qubit(g.target, n);
    auto amps = s.amplitudes();

    switch (g.kind) {
    case GateKind::H: {
        const double r = std::numbers::sqrt2 / 2.0;
        for_each_pair(amps, g.target, [r](Complex &a, Complex &b) {
            const Complex sum = a + b;
            const Complex diff = a - b;
            a = r * sum;
            b = r * diff;
        });
        break;
    }
    case GateKind::Rx: {
        const double c = std::cos(0.5 * g.angle);
        const double sn = std::sin(0.5 * g.angle);
        for_each_pair(amps, g.target, [c, sn](Complex &a, Complex &b) { rx_pair(a, b, c, sn); });
        break;
    }
    case GateKind::Rz: {
        const Complex p0 = std::polar(1.0, -0.5 * g.angle);
        const Complex p1 = std::polar(1.0, 0.5 * g.angle);
        for_each_pair(amps, g.target, [p0, p1](Complex &a, Complex &b) {
            a *= p0;
            b *= p1;
        });
        break;
    }
    case GateKind::CNOT: {
        check_qubit(g.control, n);
        if (g.control == g.target) {
            throw Error(ErrorCode::IndexOutOfRange, "CNOT control equals target");
        }
        const std::size_t cmask = std::size_t{1} << g.control;
        const std::size_t stride = std::size_t{1} << g.target;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & cmask) != 0 && (i & stride) == 0) {
                std::swap(amps[i], amps[i + stride]);
            }
        }
        break;
    }
    }
    return s;
}

StateVector &apply_circuit(StateVector &s, std::span<const Gate> gates) {
    for (const auto &g : gates) {
        apply_gate(s, g);
    }
    return s;
}

namespace {

// Rx on pairs (a + w, b + w), in interleaved re/im doubles.
inline void rx_run(double *__restrict a, double *__restrict b, std::size_t len, double c,
                   double sn) {
    for (std::size_t w = 0; w < 2 * len; w += 2) {
        const double ar = a[w], ai = a[w + 1], br = b[w], bi = b[w + 1];
        a[w] = c * ar + sn * bi;
        a[w + 1] = c * ai - sn * br;
        b[w] = c * br + sn * ai;
        b[w + 1] = c * bi - sn * ar;
    }
}

// Rx on adjacent pairs starting at p: (p[4w], p[4w+1]) with (p[4w+2], p[4w+3]).
inline void rx_adjacent(double *__restrict p, std::size_t pairs, double c, double sn) {
    for (std::size_t w = 0; w < 4 * pairs; w += 4) {
        const double ar = p[w], ai = p[w + 1], br = p[w + 2], bi = p[w + 3];
        p[w] = c * ar + sn * bi;
        p[w + 1] = c * ai - sn * br;
        p[w + 2] = c * br + sn * ai;
        p[w + 3] = c * bi - sn * ar;
    }
}

// conj(l_a) r_b + conj(l_b) r_a summed over a run, as (re, im).
inline void x_overlap_run(const double *__restrict la, const double *__restrict lb,
                          const double *__restrict ra, const double *__restrict rb,
                          std::size_t len, std::ptrdiff_t step, double &re, double &im) {
    double sre = 0.0;
    double sim = 0.0;
#pragma omp simd reduction(+ : sre, sim)
    for (std::size_t k = 0; k < len; ++k) {
        const std::ptrdiff_t w = static_cast<std::ptrdiff_t>(k) * step;
        sre += la[w] * rb[w] + la[w + 1] * rb[w + 1] + lb[w] * ra[w] + lb[w + 1] * ra[w + 1];
        sim += la[w] * rb[w + 1] - la[w + 1] * rb[w] + lb[w] * ra[w + 1] - lb[w + 1] * ra[w];
    }
    re += sre;
    im += sim;
}

} // namespace

void apply_rx_layer(StateVector &s, double theta) {
    const double c = std::cos(0.5 * theta);
    const double sn = std::sin(0.5 * theta);
    auto *d = reinterpret_cast<double *>(s.amplitudes().data());
    for_each_layer_range(
        s.num_qubits(),
        [d, c, sn](std::size_t i, std::size_t j, std::size_t len) {
            rx_run(d + 2 * i, d + 2 * j, len, c, sn);
        },
        [d, c, sn](std::size_t i, std::size_t pairs) { rx_adjacent(d + 2 * i, pairs, c, sn); });
}

Complex apply_rx_layer_pair(StateVector &l, StateVector &r, double theta) {
    if (l.num_qubits() != r.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "paired states differ in qubit count");
    }
    const double c = std::cos(0.5 * theta);
    const double sn = std::sin(0.5 * theta);
    auto *dl = reinterpret_cast<double *>(l.amplitudes().data());
    auto *dr = reinterpret_cast<double *>(r.amplitudes().data());
    double re = 0.0;
    double im = 0.0;
    for_each_layer_range(
        l.num_qubits(),
        [&](std::size_t i, std::size_t j, std::size_t len) {
            x_overlap_run(dl + 2 * i, dl + 2 * j, dr + 2 * i, dr + 2 * j, len, 2, re, im);
            rx_run(dl + 2 * i, dl + 2 * j, len, c, sn);
            rx_run(dr + 2 * i, dr + 2 * j, len, c, sn);
        },
        [&](std::size_t i, std::size_t pairs) {
            x_overlap_run(dl + 2 * i, dl + 2 * i + 2, dr + 2 * i, dr + 2 * i + 2, pairs, 4, re, im);
            rx_adjacent(dl + 2 * i, pairs, c, sn);
            rx_adjacent(dr + 2 * i, pairs, c, sn);
        });
    return {re, im};
}

void apply_diagonal(StateVector &s, std::span<const Complex> diagonal) {
    if (diagonal.size() != s.size()) {
        throw Error(ErrorCode::DimensionMismatch, "diagonal size differs from state");
    }
    auto *d = reinterpret_cast<double *>(s.amplitudes().data());
    const auto *g = reinterpret_cast<const double *>(diagonal.data());
    for (std::size_t w = 0; w < 2 * diagonal.size(); w += 2) {
        const double ar = d[w], ai = d[w + 1];
        d[w] = ar * g[w] - ai * g[w + 1];
        d[w + 1] = ar * g[w + 1] + ai * g[w];
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "inner product size mismatch");
    }
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        // conj(a) * b
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

} // namespace quav::qsim
