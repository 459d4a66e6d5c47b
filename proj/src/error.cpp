// Copyright 2026 The blockseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockseq/core/error.hpp"

#include <string>

namespace blockseq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kPointOutOfRange: return "PointOutOfRange";
    case ErrorCode::kDuplicateBlock: return "DuplicateBlock";
    case ErrorCode::kRepeatedPointInBlock: return "RepeatedPointInBlock";
    case ErrorCode::kBadBlockSize: return "BadBlockSize";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kInvalidDesign: return "InvalidDesign";
    case ErrorCode::kSubsetTooLarge: return "SubsetTooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kBadResidue: return "BadResidue";
    case ErrorCode::kOddOrder: return "OddOrder";
    case ErrorCode::kInvalidBase: return "InvalidBase";
    case ErrorCode::kEmptyUniverse: return "EmptyUniverse";
    case ErrorCode::kUnsupportedKind: return "UnsupportedKind";
    case ErrorCode::kConstantsInconsistent: return "ConstantsInconsistent";
    case ErrorCode::kStageFailed: return "StageFailed";
    case ErrorCode::kReachabilityFailed: return "ReachabilityFailed";
    case ErrorCode::kCompletionFailed: return "CompletionFailed";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnbounded: return "Unbounded";
    case ErrorCode::kBadPartition: return "BadPartition";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kTooLargeForExact: return "TooLargeForExact";
    case ErrorCode::kGreedyStuck: return "GreedyStuck";
    case ErrorCode::kEllTooSmall: return "EllTooSmall";
    case ErrorCode::kPointUsed: return "PointUsed";
    case ErrorCode::kGameOver: return "GameOver";
    case ErrorCode::kNotHammingSystem: return "NotHammingSystem";
    case ErrorCode::kStrategyInvariant: return "StrategyInvariant";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

StageFailed::StageFailed(int stage, const std::string& detail)
    : Error(ErrorCode::kStageFailed,
            "stage " + std::to_string(stage) + " failed: " + detail),
      stage_(stage) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCode::kParseError,
            "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace blockseq
