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

#include <filesystem>
#include <string>

#include "quav/qaoa/optimize.hpp"

namespace quav::qaoa {

/// "step,loss,best_loss" rows, one per optimization step.
std::string loss_trace_csv(const LossTrace &trace);

/// Plain key=value lines (layers, gamma.i, beta.i) at full precision.
std::string params_to_text(const QaoaParams &params);

/// @throws Error(ParseError) naming the offending line.
QaoaParams params_from_text(const std::string &text);

/// @throws Error(IoError) if the file cannot be written or read.
void write_text_file(const std::filesystem::path &path, const std::string &text);
std::string read_text_file(const std::filesystem::path &path);

} // namespace quav::qaoa
