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
 * Static SVG plots: the planned path over the obstacle map, and the
 * optimizer loss curve.
 */
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "quav/harness/pipeline.hpp"

namespace quav::harness {

/**
 * @brief Map plot in UTM meters (north up). Obstacles are filled polygons
 * of class "obstacle", the path a dashed polyline of class "path", and the
 * endpoints circles of class "start" and "end". The viewBox encloses
 * everything with a small margin.
 */
std::string path_svg(const PlanResult &r, const Scenario &s);

/// Loss and best-seen loss per step; a dotted line marks the ground energy
/// when it is finite.
std::string loss_svg(const qaoa::LossTrace &trace, double ground_energy);

/**
 * @brief Writes the map plot to `file` and, for runs with a loss trace,
 * the loss curve next to it as "<stem>_loss.svg".
 * @return Paths written. @throws Error(IoError).
 */
std::vector<std::filesystem::path> emit_plot_svg(const PlanResult &r, const Scenario &s,
                                                 const std::filesystem::path &file);

} // namespace quav::harness
