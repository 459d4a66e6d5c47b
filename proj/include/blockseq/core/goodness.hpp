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

#ifndef BLOCKSEQ_CORE_GOODNESS_HPP_
#define BLOCKSEQ_CORE_GOODNESS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "blockseq/core/design.hpp"

namespace blockseq {

// A permutation of [0, n) with its inverse.
class Sequencing {
 public:
  Sequencing() = default;
  // Throws InvalidArgument unless `order` is a permutation of [0, n).
  static Sequencing from_order(std::vector<Point> order);

  std::size_t size() const { return order_.size(); }
  const std::vector<Point>& order() const { return order_; }
  Point at(std::size_t i) const { return order_[i]; }
  std::size_t position(Point p) const { return pos_[p]; }

  friend bool operator==(const Sequencing& a, const Sequencing& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Point> order_;
  std::vector<std::size_t> pos_;
};

struct Violation {
  std::size_t window_start = 0;
  std::size_t window_len = 0;
  std::size_t block_index = 0;
  Block block;
  std::vector<std::size_t> positions;  // ascending sequencing indices
};

bool window_is_good(const BlockSystem& sys, std::span<const Point> window);

// Assuming `window` is good, whether appending `next` keeps it good.
bool extends_good(const BlockSystem& sys, std::span<const Point> window,
                  Point next);

std::optional<Violation> first_violation(const BlockSystem& sys,
                                         const Sequencing& seq,
                                         std::size_t ell, bool cyclic);

std::size_t max_good_ell(const BlockSystem& sys, const Sequencing& seq,
                         bool cyclic);

// Points z (sorted) for which window+z is not good.
std::vector<Point> forbidden_next(const BlockSystem& sys,
                                  std::span<const Point> window);
// Points z (sorted) for which z+window is not good.
std::vector<Point> forbidden_prev(const BlockSystem& sys,
                                  std::span<const Point> window);

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_GOODNESS_HPP_
