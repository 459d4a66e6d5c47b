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

#include "blockseq/core/goodness.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "blockseq/core/error.hpp"

namespace blockseq {
namespace {

long long index_in(std::span<const Point> window, Point p) {
  auto it = std::find(window.begin(), window.end(), p);
  return it == window.end() ? -1 : static_cast<long long>(it - window.begin());
}

// Occurrence of one block starting at one of its points. `span` is the
// distance from the first to the last point read in order, plus one.
struct Occurrence {
  std::size_t start_pos;
  std::size_t span;
};

// All admissible occurrences of block `b` in `seq`. Non-cyclic has at most
// one (the linear reading); cyclic considers every rotation of the reading.
void occurrences(const BlockSystem& sys, const Sequencing& seq,
                 const Block& b, bool cyclic, std::vector<Occurrence>& out) {
  out.clear();
  const std::size_t k = b.size();
  const long long n = static_cast<long long>(seq.size());
  long long pos[16];
  std::vector<long long> heap_pos;
  long long* p = pos;
  if (k > 16) {
    heap_pos.resize(k);
    p = heap_pos.data();
  }
  if (!cyclic) {
    long long lo = n, hi = -1;
    for (std::size_t i = 0; i < k; ++i) {
      p[i] = static_cast<long long>(seq.position(b[i]));
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    if (order_is_forbidden(sys.kind(), b, std::span<const long long>(p, k))) {
      out.push_back({static_cast<std::size_t>(lo),
                     static_cast<std::size_t>(hi - lo + 1)});
    }
    return;
  }
  for (std::size_t s = 0; s < k; ++s) {
    const long long base = static_cast<long long>(seq.position(b[s]));
    long long hi = 0;
    for (std::size_t i = 0; i < k; ++i) {
      p[i] = ((static_cast<long long>(seq.position(b[i])) - base) % n + n) % n;
      hi = std::max(hi, p[i]);
    }
    if (order_is_forbidden(sys.kind(), b, std::span<const long long>(p, k))) {
      out.push_back({static_cast<std::size_t>(base),
                     static_cast<std::size_t>(hi + 1)});
    }
  }
}

std::vector<Point> forbidden_extension(const BlockSystem& sys,
                                       std::span<const Point> window,
                                       bool at_end) {
  std::vector<Point> out;
  const std::size_t k = static_cast<std::size_t>(sys.k());
  std::vector<long long> pos(k);
  for (Point w : window) {
    for (std::uint32_t bi : sys.blocks_through(w)) {
      const Block& b = sys.block(bi);
      // Count each block once: only from its earliest point in the window.
      std::size_t present = 0;
      long long missing = -1;
      long long first_seen = std::numeric_limits<long long>::max();
      for (std::size_t i = 0; i < k; ++i) {
        long long at = index_in(window, b[i]);
        if (at < 0) {
          if (missing >= 0) {
            missing = -2;
            break;
          }
          missing = static_cast<long long>(i);
        } else {
          ++present;
          first_seen = std::min(first_seen, at);
        }
        pos[i] = at;
      }
      if (missing < 0 || present + 1 != k) continue;
      if (window[static_cast<std::size_t>(first_seen)] != w) continue;
      pos[static_cast<std::size_t>(missing)] =
          at_end ? static_cast<long long>(window.size()) : -1;
      if (order_is_forbidden(sys.kind(), b, pos)) {
        out.push_back(b[static_cast<std::size_t>(missing)]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Sequencing Sequencing::from_order(std::vector<Point> order) {
  Sequencing s;
  s.pos_.assign(order.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Point p = order[i];
    if (p >= order.size() ||
        s.pos_[p] != std::numeric_limits<std::size_t>::max()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sequencing is not a permutation of [0," +
                      std::to_string(order.size()) + ")");
    }
    s.pos_[p] = i;
  }
  s.order_ = std::move(order);
  return s;
}

bool window_is_good(const BlockSystem& sys, std::span<const Point> window) {
  const std::size_t k = static_cast<std::size_t>(sys.k());
  if (window.size() < k) return true;
  std::vector<long long> pos(k);
  for (Point w : window) {
    for (std::uint32_t bi : sys.blocks_through(w)) {
      const Block& b = sys.block(bi);
      bool all = true;
      for (std::size_t i = 0; i < k && all; ++i) {
        pos[i] = index_in(window, b[i]);
        all = pos[i] >= 0;
      }
      if (all && order_is_forbidden(sys.kind(), b, pos)) return false;
    }
  }
  return true;
}

bool extends_good(const BlockSystem& sys, std::span<const Point> window,
                  Point next) {
  const std::size_t k = static_cast<std::size_t>(sys.k());
  if (window.size() + 1 < k) return true;
  std::vector<long long> pos(k);
  for (std::uint32_t bi : sys.blocks_through(next)) {
    const Block& b = sys.block(bi);
    bool all = true;
    for (std::size_t i = 0; i < k && all; ++i) {
      pos[i] = b[i] == next ? static_cast<long long>(window.size())
                            : index_in(window, b[i]);
      all = pos[i] >= 0;
    }
    if (all && order_is_forbidden(sys.kind(), b, pos)) return false;
  }
  return true;
}

std::optional<Violation> first_violation(const BlockSystem& sys,
                                         const Sequencing& seq,
                                         std::size_t ell, bool cyclic) {
  const std::size_t n = seq.size();
  if (n != sys.n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sequencing size does not match design");
  }
  const std::size_t width = std::min(ell, n);
  std::optional<Violation> best;
  std::vector<Occurrence> occ;
  for (std::size_t bi = 0; bi < sys.num_blocks(); ++bi) {
    const Block& b = sys.block(bi);
    occurrences(sys, seq, b, cyclic, occ);
    for (const Occurrence& o : occ) {
      if (o.span > width) continue;
      const std::size_t slack = width - o.span;
      std::size_t w = 0;
      if (cyclic) {
        w = o.start_pos <= slack ? 0 : o.start_pos - slack;
      } else {
        const std::size_t end = o.start_pos + o.span;  // one past the last
        w = end > width ? end - width : 0;
      }
      const std::size_t len = o.span + (o.start_pos - w);
      if (!best || std::pair(w, len) < std::pair(best->window_start,
                                                 best->window_len)) {
        Violation v;
        v.window_start = w;
        v.window_len = len;
        v.block_index = bi;
        v.block = b;
        for (Point p : b) v.positions.push_back(seq.position(p));
        std::sort(v.positions.begin(), v.positions.end());
        best = std::move(v);
      }
    }
  }
  return best;
}

std::size_t max_good_ell(const BlockSystem& sys, const Sequencing& seq,
                         bool cyclic) {
  const std::size_t n = seq.size();
  const std::size_t cap = cyclic ? (n == 0 ? 0 : n - 1) : n;
  std::size_t min_span = std::numeric_limits<std::size_t>::max();
  std::vector<Occurrence> occ;
  for (const Block& b : sys.blocks()) {
    occurrences(sys, seq, b, cyclic, occ);
    for (const Occurrence& o : occ) min_span = std::min(min_span, o.span);
  }
  if (min_span == std::numeric_limits<std::size_t>::max()) return cap;
  return std::min(cap, min_span - 1);
}

std::vector<Point> forbidden_next(const BlockSystem& sys,
                                  std::span<const Point> window) {
  return forbidden_extension(sys, window, true);
}

std::vector<Point> forbidden_prev(const BlockSystem& sys,
                                  std::span<const Point> window) {
  return forbidden_extension(sys, window, false);
}

}  // namespace blockseq
