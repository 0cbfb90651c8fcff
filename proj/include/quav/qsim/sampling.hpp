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
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quav/qsim/state_vector.hpp"

namespace quav::qsim {

/// Measured basis state; bit q is qubit q.
using Bitstring = std::uint64_t;

/**
 * @brief i.i.d. computational-basis samples drawn from |a_b|^2.
 *
 * Identical (state, shots, seed) give identical samples in identical order.
 * @throws Error(InvalidArgument) for shots < 1.
 */
std::vector<Bitstring> sample_bitstrings(const StateVector &s, std::size_t shots,
                                         std::uint64_t seed);

/// Samples drawn from an explicit probability table (normalized internally).
std::vector<Bitstring> sample_from_probabilities(const std::vector<double> &probabilities,
                                                 std::size_t shots, std::uint64_t seed);

std::map<Bitstring, std::size_t> histogram(const std::vector<Bitstring> &samples);

/// Text form with character q holding qubit q ("1" = bit set).
std::string to_string(Bitstring b, int num_qubits);

/// Inverse of to_string. @throws Error(ParseError) on other characters.
Bitstring parse_bitstring(const std::string &text);

} // namespace quav::qsim
