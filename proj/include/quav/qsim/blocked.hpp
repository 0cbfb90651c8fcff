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
 * Traversal of every (i, i + 2^q) amplitude pair for all qubits q, ordered
 * so the whole sweep touches memory about twice instead of once per qubit.
 */
#pragma once

#include <algorithm>
#include <cstddef>

namespace quav::qsim {

inline constexpr int kBlockBits = 12;

/**
 * Calls op(i, j, len) for runs of pairs (i + w, j + w), w < len, where
 * j = i + 2^q and bit q of i is clear, covering every qubit q once.
 *
 * Qubit 0 instead gets adjacent(i, len): pairs (i + 2w, i + 2w + 1).
 *
 * Within one cache tile a qubit's pairs come after those of the qubits
 * already swept there, so op must be a per-qubit update that commutes
 * across qubits (as a layer of single-qubit gates does).
 */
template <class RangeOp, class AdjacentOp>
void for_each_layer_range(int num_qubits, RangeOp &&op, AdjacentOp &&adjacent) {
    const int low = std::min(num_qubits, kBlockBits);
    const std::size_t block = std::size_t{1} << low;
    const std::size_t size = std::size_t{1} << num_qubits;
    for (std::size_t base = 0; base < size; base += block) {
        adjacent(base, block / 2);
        for (int q = 1; q < low; ++q) {
            const std::size_t stride = std::size_t{1} << q;
            for (std::size_t off = base; off < base + block; off += 2 * stride) {
                op(off, off + stride, stride);
            }
        }
    }
    if (num_qubits <= low) {
        return;
    }

    // High qubits pair whole rows of length `block`; walk the rows in narrow
    // column tiles so every high qubit reuses the same cached tile.
    const int high = num_qubits - low;
    const std::size_t rows = std::size_t{1} << high;
    const std::size_t width = std::clamp<std::size_t>(std::size_t{8192} / rows, 1, block);
    for (std::size_t col = 0; col < block; col += width) {
        for (int h = 0; h < high; ++h) {
            const std::size_t rbit = std::size_t{1} << h;
            for (std::size_t r = 0; r < rows; ++r) {
                if ((r & rbit) == 0) {
                    op(r * block + col, (r | rbit) * block + col, width);
                }
            }
        }
    }
}

} // namespace quav::qsim
