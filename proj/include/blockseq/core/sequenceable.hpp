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

#ifndef BLOCKSEQ_CORE_SEQUENCEABLE_HPP_
#define BLOCKSEQ_CORE_SEQUENCEABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "blockseq/core/design.hpp"
#include "blockseq/core/goodness.hpp"

namespace blockseq {

// Exact floor of the cube root.
std::uint64_t icbrt(std::uint64_t v);

// Smallest n with n > 9k + 22 k^(2/3) + 10.
std::uint64_t alspach_threshold(std::uint64_t k);

struct PatternSeq {
  std::string bits;  // '0' marks a slot for a point of X
  std::uint64_t k = 0;
  std::uint64_t ellp = 0;
  std::size_t base = 0;  // 9k + floor(3k / ellp): end of the structured part
};

PatternSeq pattern_sequence(std::uint64_t k, std::size_t n);

struct PatternCheck {
  bool a = true;  // length 3r holds at most r zeros
  bool b = true;  // ... at most r-1 when ending after the structured part
  bool c = true;  // ... at most r-1 when r >= 3 ellp + 1
  bool ok() const { return a && b && c; }
};

PatternCheck pattern_properties(const PatternSeq& p);
bool pattern_properties_check(const PatternSeq& p);

struct DisjointBlocks {
  std::size_t k = 0;
  std::vector<std::uint32_t> blocks;  // indices into the system
  std::vector<Point> points;          // union, block by block
};

inline constexpr std::size_t kMaxExactBlocks = 60;

DisjointBlocks max_disjoint_blocks(const BlockSystem& psts,
                                   std::size_t max_blocks = kMaxExactBlocks);

struct SequenceableInstance {
  BlockSystem system;
  std::size_t k = 0;
  std::vector<Point> x;  // union of a maximum disjoint family
  std::vector<Point> y;  // complement, ascending
};

SequenceableInstance make_sequenceable_instance(const BlockSystem& psts);

Sequencing alspach_sequencing(const SequenceableInstance& inst);

struct SegmentReport {
  bool sequenceable = true;
  std::size_t start = 0;  // first offending segment, when not sequenceable
  std::size_t length = 0;
  std::vector<Block> cover;
};

// Checks every segment of length 3r for an exact cover by r blocks. When
// `x_union` is given, segments holding fewer than r of its points are skipped.
SegmentReport verify_sequenceable(const BlockSystem& psts,
                                  const Sequencing& seq,
                                  const std::vector<Point>* x_union = nullptr,
                                  unsigned threads = 1);

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_SEQUENCEABLE_HPP_
