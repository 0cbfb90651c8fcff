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
 * Error type shared by every planner module.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quav {

enum class ErrorCode {
    InvalidArgument,
    OutOfBounds,
    DegeneratePolygon,
    ResolutionTooCoarse,
    NoPathExists,
    DegenerateStep,
    ZeroDistance,
    EmptyPath,
    TooManyQubits,
    IndexOutOfRange,
    DimensionMismatch,
    NoFeasibleSample,
    StartInObstacle,
    EndInObstacle,
    MaxIterationsExceeded,
    ParseError,
    ValidationError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/**
 * @brief Exception raised by all planner operations.
 *
 * The code identifies the failure class; the message carries the detail
 * (offending field, pipeline stage, and so on).
 */
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code), detail_(what) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    /// Message without the code prefix.
    [[nodiscard]] const std::string &detail() const noexcept { return detail_; }

  private:
    ErrorCode code_;
    std::string detail_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::OutOfBounds:
        return "OutOfBounds";
    case ErrorCode::DegeneratePolygon:
        return "DegeneratePolygon";
    case ErrorCode::ResolutionTooCoarse:
        return "ResolutionTooCoarse";
    case ErrorCode::NoPathExists:
        return "NoPathExists";
    case ErrorCode::DegenerateStep:
        return "DegenerateStep";
    case ErrorCode::ZeroDistance:
        return "ZeroDistance";
    case ErrorCode::EmptyPath:
        return "EmptyPath";
    case ErrorCode::TooManyQubits:
        return "TooManyQubits";
    case ErrorCode::IndexOutOfRange:
        return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorCode::NoFeasibleSample:
        return "NoFeasibleSample";
    case ErrorCode::StartInObstacle:
        return "StartInObstacle";
    case ErrorCode::EndInObstacle:
        return "EndInObstacle";
    case ErrorCode::MaxIterationsExceeded:
        return "MaxIterationsExceeded";
    case ErrorCode::ParseError:
        return "ParseError";
    case ErrorCode::ValidationError:
        return "ValidationError";
    case ErrorCode::IoError:
        return "IoError";
    }
    return "Unknown";
}

} // namespace quav
