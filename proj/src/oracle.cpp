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

#include "blockseq/core/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "blockseq/core/error.hpp"

namespace blockseq {
namespace {

class PrefixSearch {
 public:
  PrefixSearch(const BlockSystem& sys, std::size_t ell, bool cyclic,
               const std::atomic<std::size_t>& best_first)
      : sys_(sys), ell_(ell), cyclic_(cyclic), best_first_(best_first),
        used_(sys.n(), 0) {}

  std::optional<Sequencing> from(Point first) {
    order_.reserve(sys_.n());  // windows below are spans into order_
    order_.assign(1, first);
    std::fill(used_.begin(), used_.end(), 0);
    used_[first] = 1;
    first_ = first;
    if (dfs()) return Sequencing::from_order(order_);
    return std::nullopt;
  }

 private:
  bool dfs() {
    if (best_first_.load() < first_) return false;  // a smaller witness exists
    const std::size_t n = sys_.n();
    if (order_.size() == n) {
      if (!cyclic_) return true;
      return !first_violation(sys_, Sequencing::from_order(order_), ell_, true);
    }
    const std::size_t w = std::min(order_.size(), ell_ - 1);
    std::span<const Point> window(order_.data() + (order_.size() - w), w);
    for (Point p = 0; p < n; ++p) {
      if (used_[p] || !extends_good(sys_, window, p)) continue;
      used_[p] = 1;
      order_.push_back(p);
      if (dfs()) return true;
      order_.pop_back();
      used_[p] = 0;
    }
    return false;
  }

  const BlockSystem& sys_;
  std::size_t ell_;
  bool cyclic_;
  const std::atomic<std::size_t>& best_first_;
  std::vector<char> used_;
  std::vector<Point> order_;
  Point first_ = 0;
};

// Whether r pairwise disjoint blocks among `inside` exist, by plain subset
// enumeration.
bool choose_disjoint(const std::vector<const Block*>& inside, std::size_t from,
                     std::size_t r, std::vector<char>& taken) {
  if (r == 0) return true;
  for (std::size_t i = from; i < inside.size(); ++i) {
    const Block& b = *inside[i];
    if (std::any_of(b.begin(), b.end(), [&](Point p) { return taken[p]; })) {
      continue;
    }
    for (Point p : b) taken[p] = 1;
    const bool ok = choose_disjoint(inside, i + 1, r - 1, taken);
    for (Point p : b) taken[p] = 0;
    if (ok) return true;
  }
  return false;
}

bool segment_is_union(const BlockSystem& sys, std::span<const Point> seg) {
  std::vector<char> in(sys.n(), 0);
  for (Point p : seg) in[p] = 1;
  std::vector<const Block*> inside;
  for (const Block& b : sys.blocks()) {
    if (std::all_of(b.begin(), b.end(), [&](Point p) { return in[p]; })) {
      inside.push_back(&b);
    }
  }
  std::vector<char> taken(sys.n(), 0);
  return choose_disjoint(inside, 0, seg.size() / 3, taken);
}

bool permute(const BlockSystem& sys, std::vector<Point>& order,
             std::vector<char>& used) {
  const std::size_t n = sys.n();
  if (order.size() == n) return true;
  for (Point p = 0; p < n; ++p) {
    if (used[p]) continue;
    order.push_back(p);
    bool bad = false;
    for (std::size_t len = 3; len <= order.size() && !bad; len += 3) {
      bad = segment_is_union(
          sys, std::span<const Point>(order.data() + order.size() - len, len));
    }
    if (!bad) {
      used[p] = 1;
      if (permute(sys, order, used)) return true;
      used[p] = 0;
    }
    order.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Sequencing> backtrack_sequencing(const BlockSystem& sys,
                                               std::size_t ell, bool cyclic,
                                               unsigned threads,
                                               std::size_t max_n) {
  const std::size_t n = sys.n();
  if (n > max_n) throw Error(ErrorCode::kTooLarge, "system too large for search");
  if (ell == 0) throw Error(ErrorCode::kInvalidArgument, "ell must be positive");
  std::atomic<std::size_t> best_first{n};
  std::vector<std::optional<Sequencing>> found(n);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      PrefixSearch search(sys, ell, cyclic, best_first);
      for (std::size_t f = next++; f < n; f = next++) {
        if (f > best_first.load()) break;
        found[f] = search.from(static_cast<Point>(f));
        if (found[f]) {
          std::size_t cur = best_first.load();
          while (f < cur && !best_first.compare_exchange_weak(cur, f)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  for (std::optional<Sequencing>& s : found) {
    if (s) return std::move(s);
  }
  return std::nullopt;
}

std::size_t oracle_max_ell(const BlockSystem& sys, bool cyclic,
                           unsigned threads, std::size_t max_n) {
  const std::size_t n = sys.n();
  if (n > max_n) throw Error(ErrorCode::kTooLarge, "system too large for search");
  const std::size_t cap = cyclic ? (n == 0 ? 0 : n - 1) : n;
  // Windows shorter than k hold no block, so k - 1 is always attainable.
  std::size_t lo = std::min(cap, static_cast<std::size_t>(sys.k() - 1));
  std::size_t hi = cap;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (backtrack_sequencing(sys, mid, cyclic, threads, max_n)) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

bool brute_sequenceable(const BlockSystem& psts, std::size_t max_n) {
  if (psts.k() != 3 || psts.directed()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sequenceability is defined for undirected triple systems");
  }
  if (psts.n() > max_n) {
    throw Error(ErrorCode::kTooLarge, "system too large for brute force");
  }
  std::vector<Point> order;
  std::vector<char> used(psts.n(), 0);
  return permute(psts, order, used);
}

}  // namespace blockseq
