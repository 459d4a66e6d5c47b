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

#ifndef BLOCKSEQ_CORE_ERROR_HPP_
#define BLOCKSEQ_CORE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blockseq {

enum class ErrorCode {
  kInvalidArgument,
  kPointOutOfRange,
  kDuplicateBlock,
  kRepeatedPointInBlock,
  kBadBlockSize,
  kBadParameters,
  kInvalidDesign,
  kSubsetTooLarge,
  kParseError,
  kIoError,
  kBadResidue,
  kOddOrder,
  kInvalidBase,
  kEmptyUniverse,
  kUnsupportedKind,
  kConstantsInconsistent,
  kStageFailed,
  kReachabilityFailed,
  kCompletionFailed,
  kInfeasible,
  kUnbounded,
  kBadPartition,
  kTooShort,
  kTooLargeForExact,
  kGreedyStuck,
  kEllTooSmall,
  kPointUsed,
  kGameOver,
  kNotHammingSystem,
  kStrategyInvariant,
  kTooLarge,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the staged engines when a greedy choice set is empty.
class StageFailed : public Error {
 public:
  StageFailed(int stage, const std::string& detail);
  int stage() const noexcept { return stage_; }

 private:
  int stage_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_ERROR_HPP_
