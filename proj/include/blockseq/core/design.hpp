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

#ifndef BLOCKSEQ_CORE_DESIGN_HPP_
#define BLOCKSEQ_CORE_DESIGN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace blockseq {

using Point = std::uint32_t;
using Block = std::vector<Point>;

enum class DesignKind { kPSTS, kSTS, kSQS, kMTS, kDTS, kBD };

std::string_view kind_name(DesignKind kind);
std::optional<DesignKind> parse_kind(std::string_view name);

// MTS and DTS blocks are ordered; every other kind is a plain set.
bool is_directed(DesignKind kind);

struct SubsetHash {
  std::size_t operator()(const std::vector<Point>& key) const noexcept;
};

// Maps a sorted (k-1)-subset to the indices of the blocks containing it.
using CompletionIndex =
    std::unordered_map<std::vector<Point>, std::vector<std::uint32_t>,
                       SubsetHash>;

enum class Validation { kStrict, kSkip };

// Immutable design. Blocks are canonicalized on build: unordered kinds are
// sorted ascending, MTS blocks rotate their minimum to the front, DTS blocks
// keep the given order.
class BlockSystem {
 public:
  static BlockSystem build(DesignKind kind, std::size_t n, int t, int k,
                           int lambda, std::vector<Block> blocks,
                           Validation validation = Validation::kStrict);

  DesignKind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  int t() const { return t_; }
  int k() const { return k_; }
  int lambda() const { return lambda_; }
  bool directed() const { return is_directed(kind_); }

  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }

  std::span<const std::uint32_t> blocks_through(Point p) const {
    return incidence_[p];
  }
  // Blocks whose point set contains `sorted_key`, a sorted (k-1)-subset.
  std::span<const std::uint32_t> blocks_containing(
      const std::vector<Point>& sorted_key) const;

  const CompletionIndex& completion_index() const { return index_; }
  const std::vector<std::vector<std::uint32_t>>& incidence() const {
    return incidence_;
  }

 private:
  BlockSystem() = default;
  void build_indices();

  DesignKind kind_ = DesignKind::kPSTS;
  std::size_t n_ = 0;
  int t_ = 2;
  int k_ = 3;
  int lambda_ = 1;
  std::vector<Block> blocks_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  CompletionIndex index_;
};

// Recomputes the completion index from the block list alone.
CompletionIndex rebuild_completion_index(const BlockSystem& sys);

struct SubsetViolation {
  std::vector<Point> subset;
  int found = 0;
  int required = 0;
  bool at_most = false;  // `required` is an upper bound, not an equality.
};

struct ValidationReport {
  std::vector<SubsetViolation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_system(const BlockSystem& sys);

// Blocks containing `subset`. For DTS the subset is an ordered tuple that
// must appear in stored order; for MTS in the order of some rotation.
std::vector<Block> completions(const BlockSystem& sys,
                               std::span<const Point> subset);

// True when the points of `block`, read in the order given by `pos`
// (ascending position), form a forbidden sequence of the kind.
bool order_is_forbidden(DesignKind kind, std::span<const Point> block,
                        std::span<const long long> pos);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_DESIGN_HPP_
