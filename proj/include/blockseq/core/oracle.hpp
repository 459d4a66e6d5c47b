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

#ifndef BLOCKSEQ_CORE_ORACLE_HPP_
#define BLOCKSEQ_CORE_ORACLE_HPP_

#include <cstddef>
#include <optional>

#include "blockseq/core/design.hpp"
#include "blockseq/core/goodness.hpp"

namespace blockseq {

inline constexpr std::size_t kOracleMaxN = 16;
inline constexpr std::size_t kBruteSequenceableMaxN = 9;

// Depth-first search over prefixes. Returns the witness whose first point is
// smallest, or nothing when no (cyclic) ell-good sequencing exists.
std::optional<Sequencing> backtrack_sequencing(const BlockSystem& sys,
                                               std::size_t ell, bool cyclic,
                                               unsigned threads = 1,
                                               std::size_t max_n = kOracleMaxN);

// Largest ell admitting a witness; cyclic ell is capped at n - 1.
std::size_t oracle_max_ell(const BlockSystem& sys, bool cyclic,
                           unsigned threads = 1,
                           std::size_t max_n = kOracleMaxN);

// Whether some permutation has no length-3r segment that is the union of r
// pairwise disjoint blocks.
bool brute_sequenceable(const BlockSystem& psts,
                        std::size_t max_n = kBruteSequenceableMaxN);

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_ORACLE_HPP_
