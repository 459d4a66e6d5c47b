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

#ifndef BLOCKSEQ_CORE_CONSTRUCTIONS_HPP_
#define BLOCKSEQ_CORE_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "blockseq/core/design.hpp"
#include "blockseq/core/goodness.hpp"

namespace blockseq {

// Hooked Skolem sequence of order m: pairs[i-1] = (a_i, b_i), b_i - a_i = i.
struct SkolemPairs {
  std::size_t m = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

// O'Keefe's family; requires m = 2 (mod 4).
SkolemPairs okeefe_pairs(std::size_t m);

struct SystemWithSequencing {
  BlockSystem system;
  Sequencing sequencing;
};

// STS(6m+1) with blocks {x, x+i, x+m+b_i} mod 6m+1, and the natural order.
SystemWithSequencing skolem_sts(std::size_t m);

// Triples of nonzero vectors of GF(2)^r summing to zero. Point id p stands
// for the vector with binary label p+1.
BlockSystem hamming_sts(int r);

// Lines of the affine space AG(r,3); point id is the base-3 coordinate word.
BlockSystem affine_sts(int r);

// 4-subsets of GF(2)^r summing to zero.
BlockSystem boolean_sqs(int r);

struct OneFactorization {
  std::size_t m = 0;
  // factors[i-1] is F_i; edges stored as (min, max).
  std::vector<std::vector<std::pair<Point, Point>>> factors;
};

OneFactorization circle_one_factorization(std::size_t m);

// SQS(4m) from an SQS(m) with m even, with the V1 V2 V3 V4 sequencing.
SystemWithSequencing sqs_quadruple(const BlockSystem& base);

Sequencing natural_sequencing(std::size_t n);

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_CONSTRUCTIONS_HPP_
