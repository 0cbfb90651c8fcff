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
#include "quav/qsim/sampling.hpp"

#include <algorithm>

#include "quav/error.hpp"
#include "quav/random.hpp"

namespace quav::qsim {

std::vector<Bitstring> sample_from_probabilities(const std::vector<double> &probabilities,
                                                 std::size_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw Error(ErrorCode::InvalidArgument, "shots must be >= 1");
    }
    std::vector<double> cumulative(probabilities.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        running += probabilities[i];
        cumulative[i] = running;
    }
    if (!(running > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "probabilities sum to zero");
    }

    Rng rng(seed);
    std::vector<Bitstring> out;
    out.reserve(shots);
    for (std::size_t k = 0; k < shots; ++k) {
        const double u = rng.uniform() * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        // Skip zero-probability tail entries that share the final cumulative.
        if (it == cumulative.end()) {
            it = std::lower_bound(cumulative.begin(), cumulative.end(), running);
        }
        out.push_back(static_cast<Bitstring>(it - cumulative.begin()));
    }
    return out;
}

std::vector<Bitstring> sample_bitstrings(const StateVector &s, std::size_t shots,
                                         std::uint64_t seed) {
    return sample_from_probabilities(s.probabilities(), shots, seed);
}

std::map<Bitstring, std::size_t> histogram(const std::vector<Bitstring> &samples) {
    std::map<Bitstring, std::size_t> counts;
    for (Bitstring b : samples) {
        ++counts[b];
    }
    return counts;
}

std::string to_string(Bitstring b, int num_qubits) {
    std::string text(static_cast<std::size_t>(num_qubits), '0');
    for (int q = 0; q < num_qubits; ++q) {
        if (((b >> q) & 1U) != 0) {
            text[static_cast<std::size_t>(q)] = '1';
        }
    }
    return text;
}

Bitstring parse_bitstring(const std::string &text) {
    if (text.size() > 64) {
        throw Error(ErrorCode::ParseError, "bitstring longer than 64 qubits");
    }
    Bitstring b = 0;
    for (std::size_t q = 0; q < text.size(); ++q) {
        if (text[q] == '1') {
            b |= Bitstring{1} << q;
        } else if (text[q] != '0') {
            throw Error(ErrorCode::ParseError, "bitstring characters must be 0 or 1");
        }
    }
    return b;
}

} // namespace quav::qsim
