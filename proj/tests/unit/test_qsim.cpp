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
#include <doctest.h>

#include <cmath>
#include <random>

#include "quav/error.hpp"
#include "quav/qsim/observable.hpp"
#include "quav/qsim/sampling.hpp"
#include "quav/qsim/state_vector.hpp"
#include "support/oracles.hpp"

using namespace quav;
using namespace quav::qsim;

namespace {

std::vector<Gate> random_circuit(std::mt19937_64 &rng, int n, int count) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<Gate> gates;
    while (static_cast<int>(gates.size()) < count) {
        const int q = qubit(rng);
        switch (kind(rng)) {
        case 0:
            gates.push_back(Gate::h(q));
            break;
        case 1:
            gates.push_back(Gate::rx(q, angle(rng)));
            break;
        case 2:
            gates.push_back(Gate::rz(q, angle(rng)));
            break;
        default:
            if (n > 1) {
                int t = qubit(rng);
                while (t == q) {
                    t = qubit(rng);
                }
                gates.push_back(Gate::cnot(q, t));
            }
        }
    }
    return gates;
}

StateVector random_state(std::mt19937_64 &rng, int n) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector(n, std::move(amps));
}

} // namespace

TEST_SUITE("state vector") {
    TEST_CASE("uniform superposition") {
        const auto s1 = init_plus_state(1);
        CHECK(s1[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(s1[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
        const auto s3 = init_plus_state(3);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(s3[i].real() == doctest::Approx(0.35355).epsilon(1e-5));
            CHECK(s3[i].imag() == 0.0);
        }
        StateVector h(3);
        for (int q = 0; q < 3; ++q) {
            apply_gate(h, Gate::h(q));
        }
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(std::abs(h[i] - s3[i]) < 1e-15);
        }
    }

    TEST_CASE("qubit limits and index errors") {
        CHECK_THROWS_AS(StateVector(0), Error);
        CHECK_THROWS_AS(StateVector(25), Error);
        CHECK_THROWS_AS(init_plus_state(25), Error);
        StateVector s(2);
        try {
            apply_gate(s, Gate::h(2));
            FAIL("expected IndexOutOfRange");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::IndexOutOfRange);
        }
        CHECK_THROWS_AS(apply_gate(s, Gate::cnot(1, 1)), Error);
        CHECK_THROWS_AS(StateVector(2, std::vector<Complex>(3)), Error);
    }

    TEST_CASE("Rz on |0> only changes the global phase") {
        StateVector s(1);
        apply_gate(s, Gate::rz(0, 1.234));
        CHECK(std::norm(s[0]) == doctest::Approx(1.0));
        CHECK(std::norm(s[1]) == 0.0);
    }

    TEST_CASE("gate application matches the dense unitary oracle") {
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 1 + trial % 6;
            const auto gates = random_circuit(rng, n, 30);
            StateVector s(n);
            apply_circuit(s, gates);
            const auto ref = quav::testing::apply_to_zero(quav::testing::circuit_unitary(gates, n));
            double err = 0.0;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                err = std::max(err, std::abs(s[i] - ref[i]));
            }
            CHECK(err < 1e-10);
        }
    }

    TEST_CASE("norm is preserved over long circuits") {
        std::mt19937_64 rng(2);
        StateVector s(6);
        apply_circuit(s, random_circuit(rng, 6, 10000));
        CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
    }

    TEST_CASE("Rx layer equals one Rx gate per qubit") {
        std::mt19937_64 rng(3);
        for (int n : {1, 2, 5, 12, 14}) {
            auto a = random_state(rng, n);
            auto b = a;
            apply_rx_layer(a, 0.77);
            for (int q = 0; q < n; ++q) {
                apply_gate(b, Gate::rx(q, 0.77));
            }
            double err = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                err = std::max(err, std::abs(a[i] - b[i]));
            }
            CHECK(err < 1e-13);
        }
    }

    TEST_CASE("paired Rx layer returns the summed X overlap before rotating") {
        std::mt19937_64 rng(4);
        for (int n : {1, 3, 13}) {
            auto l = random_state(rng, n);
            auto r = random_state(rng, n);
            Complex expected{};
            for (int q = 0; q < n; ++q) {
                const std::size_t bit = std::size_t{1} << q;
                for (std::size_t i = 0; i < l.size(); ++i) {
                    expected += std::conj(l[i]) * r[i ^ bit];
                }
            }
            auto l2 = l;
            auto r2 = r;
            const Complex got = apply_rx_layer_pair(l, r, -0.4);
            CHECK(std::abs(got - expected) < 1e-11);
            apply_rx_layer(l2, -0.4);
            apply_rx_layer(r2, -0.4);
            for (std::size_t i = 0; i < l.size(); ++i) {
                CHECK(std::abs(l[i] - l2[i]) < 1e-14);
                CHECK(std::abs(r[i] - r2[i]) < 1e-14);
            }
        }
    }

    TEST_CASE("diagonal multiply and inner product") {
        std::mt19937_64 rng(5);
        auto s = random_state(rng, 4);
        const auto orig = s;
        std::vector<Complex> diag(16);
        for (std::size_t i = 0; i < 16; ++i) {
            diag[i] = std::polar(1.0, 0.3 * static_cast<double>(i));
        }
        apply_diagonal(s, diag);
        for (std::size_t i = 0; i < 16; ++i) {
            CHECK(std::abs(s[i] - orig[i] * diag[i]) < 1e-15);
        }
        CHECK(std::abs(inner_product(orig.amplitudes(), orig.amplitudes()) - 1.0) < 1e-12);
        CHECK_THROWS_AS(apply_diagonal(s, std::vector<Complex>(8)), Error);
    }
}

TEST_SUITE("diagonal observables") {
    TEST_CASE("simple expectation values") {
        DiagonalObservable obs{{0.3, -1.2, 2.0}, {}};
        CHECK(std::abs(expectation_diagonal(init_plus_state(3), obs)) < 1e-15);
        CHECK(expectation_diagonal(StateVector(3), obs) == doctest::Approx(1.1));
    }

    TEST_CASE("energy table and expectation match per-basis-state evaluation") {
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int n = 1; n <= 9; ++n) {
            std::vector<double> w(static_cast<std::size_t>(n));
            for (auto &x : w) {
                x = u(rng);
            }
            std::vector<Coupling> cs;
            std::vector<std::tuple<int, int, double>> zz;
            for (int k = 0; k < n; ++k) {
                const int i = static_cast<int>(rng() % static_cast<unsigned>(n));
                const int j = static_cast<int>(rng() % static_cast<unsigned>(n));
                if (i != j) {
                    const double s = u(rng);
                    cs.push_back({i, j, s});
                    zz.emplace_back(i, j, s);
                }
            }
            const DiagonalObservable obs{w, cs};
            const auto table = energy_table(obs);
            const auto state = random_state(rng, n);
            double ref = 0.0;
            for (std::uint64_t b = 0; b < table.size(); ++b) {
                const double e = quav::testing::ising_energy(b, w, zz);
                CHECK(table[b] == doctest::Approx(e).epsilon(1e-12));
                CHECK(obs.energy(b) == doctest::Approx(e).epsilon(1e-12));
                ref += std::norm(state[b]) * e;
            }
            CHECK(std::abs(expectation_diagonal(state, obs) - ref) < 1e-12);
        }
    }

    TEST_CASE("expectation is invariant under Rz") {
        std::mt19937_64 rng(7);
        auto s = random_state(rng, 4);
        const DiagonalObservable obs{{0.5, -0.25, 1.0, 0.1}, {{0, 3, 0.7}}};
        const double before = expectation_diagonal(s, obs);
        apply_gate(s, Gate::rz(2, 0.9));
        apply_gate(s, Gate::rz(0, -2.1));
        CHECK(expectation_diagonal(s, obs) == doctest::Approx(before).epsilon(1e-13));
    }

    TEST_CASE("invalid couplings are rejected") {
        const DiagonalObservable bad{{0.0, 0.0}, {{0, 2, 1.0}}};
        CHECK_THROWS_AS(bad.validate(), Error);
        CHECK_THROWS_AS(expectation_diagonal(StateVector(3), DiagonalObservable{{1.0}, {}}), Error);
    }
}

TEST_SUITE("sampling") {
    TEST_CASE("basis state always samples itself") {
        for (auto b : sample_bitstrings(StateVector(5), 200, 1)) {
            CHECK(b == 0);
        }
    }

    TEST_CASE("plus state bit frequency within 4 sigma") {
        const auto samples = sample_bitstrings(init_plus_state(1), 100000, 42);
        double ones = 0.0;
        for (auto b : samples) {
            ones += static_cast<double>(b & 1U);
        }
        const double sigma = std::sqrt(100000 * 0.25);
        CHECK(std::abs(ones - 50000.0) < 4.0 * sigma);
    }

    TEST_CASE("same seed, same samples; different seed, different samples") {
        const auto s = init_plus_state(6);
        CHECK(sample_bitstrings(s, 500, 9) == sample_bitstrings(s, 500, 9));
        CHECK(sample_bitstrings(s, 500, 9) != sample_bitstrings(s, 500, 10));
        CHECK_THROWS_AS(sample_bitstrings(s, 0, 1), Error);
    }

    TEST_CASE("empirical distribution converges in total variation") {
        std::mt19937_64 rng(8);
        const auto s = random_state(rng, 4);
        const auto p = s.probabilities();
        const auto counts = histogram(sample_bitstrings(s, 100000, 3));
        double tv = 0.0;
        for (std::size_t b = 0; b < p.size(); ++b) {
            const auto it = counts.find(b);
            const double f = it == counts.end() ? 0.0 : static_cast<double>(it->second) / 1e5;
            tv += 0.5 * std::abs(f - p[b]);
        }
        CHECK(tv < 0.01);
    }

    TEST_CASE("text form: character q is qubit q") {
        CHECK(to_string(0b0011, 4) == "1100");
        CHECK(parse_bitstring("1100") == 0b0011);
        CHECK(parse_bitstring(to_string(0xABCDE, 20)) == 0xABCDE);
        CHECK_THROWS_AS(parse_bitstring("10x"), Error);
    }
}
