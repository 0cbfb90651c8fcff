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

#include <span>
#include <vector>

namespace quav::qaoa {

struct AdamConfig {
    double learning_rate{0.1};
    double beta1{0.9};
    double beta2{0.999};
    double epsilon{1e-8};
};

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    int t{0};
};

/**
 * @brief One bias-corrected Adam update of @p params in place.
 *
 * An empty state is sized on first use.
 * @throws Error(DimensionMismatch) if sizes disagree.
 */
void adam_step(std::vector<double> &params, std::span<const double> grad, AdamState &state,
               const AdamConfig &cfg = {});

} // namespace quav::qaoa
