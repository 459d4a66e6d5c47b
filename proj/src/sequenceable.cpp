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

#include "blockseq/core/sequenceable.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "blockseq/core/error.hpp"

namespace blockseq {
namespace {

void require_triples(const BlockSystem& sys) {
  if (sys.k() != 3 || sys.directed()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sequenceability is defined for undirected triple systems");
  }
}

struct DisjointSearch {
  const BlockSystem& sys;
  std::vector<char> used;
  std::vector<std::uint32_t> current;
  std::vector<std::uint32_t> best;
  std::size_t free_points = 0;

  bool fits(const Block& b) const {
    return std::none_of(b.begin(), b.end(),
                        [&](Point p) { return used[p] != 0; });
  }

  void set(const Block& b, char v) {
    for (Point p : b) used[p] = v;
    free_points = v ? free_points - b.size() : free_points + b.size();
  }

  void run(std::size_t next) {
    if (current.size() > best.size()) best = current;
    const std::size_t remaining = sys.num_blocks() - next;
    const std::size_t cap = std::min(remaining, free_points / 3);
    if (current.size() + cap <= best.size()) return;
    for (std::size_t i = next; i < sys.num_blocks(); ++i) {
      const Block& b = sys.block(i);
      if (!fits(b)) continue;
      set(b, 1);
      current.push_back(static_cast<std::uint32_t>(i));
      run(i + 1);
      current.pop_back();
      set(b, 0);
      if (current.size() + std::min(sys.num_blocks() - i - 1,
                                    free_points / 3) <= best.size()) {
        return;
      }
    }
  }
};

// Exact cover of one segment by pairwise disjoint blocks.
class SegmentCover {
 public:
  explicit SegmentCover(const BlockSystem& sys)
      : sys_(sys), stamp_(sys.n(), 0), covered_(sys.n(), 0) {}

  bool covers(std::span<const Point> seg, std::vector<Block>* cover) {
    ++epoch_;
    for (Point p : seg) {
      stamp_[p] = epoch_;
      covered_[p] = 0;
    }
    seg_ = seg;
    chosen_.clear();
    if (!dfs(0)) return false;
    if (cover != nullptr) {
      cover->clear();
      for (std::uint32_t b : chosen_) cover->push_back(sys_.block(b));
    }
    return true;
  }

 private:
  bool inside_free(const Block& b) const {
    return std::all_of(b.begin(), b.end(), [&](Point q) {
      return stamp_[q] == epoch_ && covered_[q] == 0;
    });
  }

  bool dfs(std::size_t from) {
    while (from < seg_.size() && covered_[seg_[from]] != 0) ++from;
    if (from == seg_.size()) return true;
    const Point p = seg_[from];
    for (std::uint32_t bi : sys_.blocks_through(p)) {
      const Block& b = sys_.block(bi);
      if (!inside_free(b)) continue;
      for (Point q : b) covered_[q] = 1;
      chosen_.push_back(bi);
      if (dfs(from + 1)) return true;
      chosen_.pop_back();
      for (Point q : b) covered_[q] = 0;
    }
    return false;
  }

  const BlockSystem& sys_;
  std::vector<std::uint64_t> stamp_;
  std::vector<char> covered_;
  std::uint64_t epoch_ = 0;
  std::span<const Point> seg_;
  std::vector<std::uint32_t> chosen_;
};

struct SegmentHit {
  std::size_t start = std::numeric_limits<std::size_t>::max();
  std::size_t length = 0;
  std::vector<Block> cover;
};

// Scans the starts congruent to `offset` modulo `stride`; stops at the first
// hit since starts are visited in increasing order.
SegmentHit scan_starts(const BlockSystem& sys, const Sequencing& seq,
                       const std::vector<char>* in_x, std::size_t offset,
                       std::size_t stride,
                       const std::atomic<std::size_t>* best_start) {
  SegmentHit hit;
  SegmentCover solver(sys);
  const std::size_t n = seq.size();
  const std::vector<Point>& order = seq.order();
  for (std::size_t start = offset; start < n; start += stride) {
    if (best_start != nullptr && start > best_start->load()) break;
    std::size_t x_count = 0;
    for (std::size_t r = 1; start + 3 * r <= n; ++r) {
      if (in_x != nullptr) {
        for (std::size_t i = start + 3 * (r - 1); i < start + 3 * r; ++i) {
          x_count += (*in_x)[order[i]] != 0;
        }
        if (x_count < r) continue;
      }
      std::span<const Point> seg(order.data() + start, 3 * r);
      if (solver.covers(seg, &hit.cover)) {
        hit.start = start;
        hit.length = 3 * r;
        return hit;
      }
    }
  }
  return hit;
}

}  // namespace

std::uint64_t icbrt(std::uint64_t v) {
  std::uint64_t lo = 0, hi = 2'642'245;  // floor(cbrt(2^64 - 1))
  while (lo < hi) {
    const std::uint64_t mid = (lo + hi + 1) / 2;
    if (mid * mid * mid <= v) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

std::uint64_t alspach_threshold(std::uint64_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  // 22 k^(2/3) < m  iff  10648 k^2 < m^3; take the least such integer m.
  const std::uint64_t k2 = k * k;
  std::uint64_t m = icbrt(10648 * k2);
  while (m * m * m <= 10648 * k2) ++m;
  return 9 * k + 10 + m;
}

PatternSeq pattern_sequence(std::uint64_t k, std::size_t n) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  PatternSeq p;
  p.k = k;
  p.ellp = icbrt(k);
  const std::uint64_t copies = 3 * k / p.ellp;
  p.base = static_cast<std::size_t>(9 * k + copies);
  if (n < p.base) {
    throw Error(ErrorCode::kTooShort, "pattern needs n >= 9k + floor(3k/l)");
  }
  std::string block;
  for (std::uint64_t i = 1; i < p.ellp; ++i) block += "011";
  block += "0111";
  for (std::uint64_t c = 0; c < copies; ++c) p.bits += block;
  for (std::uint64_t z = copies * p.ellp; z < 3 * k; ++z) p.bits += "011";
  p.bits.resize(n, '1');
  return p;
}

PatternCheck pattern_properties(const PatternSeq& p) {
  PatternCheck out;
  const std::size_t n = p.bits.size();
  std::vector<std::size_t> zeros;  // 1-based positions
  for (std::size_t i = 0; i < n; ++i) {
    if (p.bits[i] == '0') zeros.push_back(i + 1);
  }
  // Some window of length w >= span holds c zeros iff the c consecutive
  // zeros with the shortest span fit in it.
  std::vector<std::size_t> min_span(zeros.size() + 1, 0);
  for (std::size_t c = 1; c <= zeros.size(); ++c) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i + c <= zeros.size(); ++i) {
      best = std::min(best, zeros[i + c - 1] - zeros[i] + 1);
    }
    min_span[c] = best;
  }
  for (std::size_t r = 1; 3 * r <= n; ++r) {
    if (r + 1 <= zeros.size() && min_span[r + 1] <= 3 * r) out.a = false;
    if (r >= 3 * p.ellp + 1 && r <= zeros.size() && min_span[r] <= 3 * r) {
      out.c = false;
    }
    // A window [s, s + 3r - 1] ending at or after base + 1 that covers the
    // zeros z_i .. z_{i+r-1} exists iff the bounds on s below are compatible.
    const std::size_t w = 3 * r;
    const std::size_t e0 = p.base + 1;
    for (std::size_t i = 0; out.b && i + r <= zeros.size(); ++i) {
      const std::size_t hi = std::min(zeros[i], n - w + 1);
      std::size_t lo = 1;
      if (zeros[i + r - 1] + 1 > w) lo = std::max(lo, zeros[i + r - 1] + 1 - w);
      if (e0 + 1 > w) lo = std::max(lo, e0 + 1 - w);
      if (lo <= hi) out.b = false;
    }
  }
  return out;
}

bool pattern_properties_check(const PatternSeq& p) {
  return pattern_properties(p).ok();
}

DisjointBlocks max_disjoint_blocks(const BlockSystem& psts,
                                   std::size_t max_blocks) {
  require_triples(psts);
  if (psts.num_blocks() > max_blocks) {
    throw Error(ErrorCode::kTooLargeForExact,
                "too many blocks for exact disjoint-block search");
  }
  DisjointSearch s{psts, std::vector<char>(psts.n(), 0), {}, {}, psts.n()};
  // Greedy seed.
  for (std::size_t i = 0; i < psts.num_blocks(); ++i) {
    if (s.fits(psts.block(i))) {
      s.set(psts.block(i), 1);
      s.best.push_back(static_cast<std::uint32_t>(i));
    }
  }
  for (std::uint32_t b : s.best) s.set(psts.block(b), 0);
  s.run(0);
  DisjointBlocks out;
  out.k = s.best.size();
  out.blocks = s.best;
  for (std::uint32_t b : s.best) {
    for (Point p : psts.block(b)) out.points.push_back(p);
  }
  return out;
}

SequenceableInstance make_sequenceable_instance(const BlockSystem& psts) {
  const DisjointBlocks d = max_disjoint_blocks(psts);
  SequenceableInstance inst{psts, d.k, d.points, {}};
  std::vector<char> in_x(psts.n(), 0);
  for (Point p : d.points) in_x[p] = 1;
  for (Point p = 0; p < psts.n(); ++p) {
    if (!in_x[p]) inst.y.push_back(p);
  }
  return inst;
}

Sequencing alspach_sequencing(const SequenceableInstance& inst) {
  const BlockSystem& sys = inst.system;
  require_triples(sys);
  const std::size_t n = sys.n();
  if (inst.x.size() != 3 * inst.k || inst.x.size() + inst.y.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "inconsistent instance");
  }
  if (inst.k == 0) {
    std::vector<Point> order(inst.y.begin(), inst.y.end());
    return Sequencing::from_order(std::move(order));
  }
  const PatternSeq pat = pattern_sequence(inst.k, n);
  const std::size_t ellp = static_cast<std::size_t>(pat.ellp);
  const std::size_t three_k = 3 * inst.k;

  std::vector<char> used(n, 0);
  std::vector<Point> used_y;
  std::vector<Point> order;
  order.reserve(n);
  std::vector<char> banned(n, 0);
  std::size_t j = 0;  // zeros among s_1..s_i
  for (std::size_t i = 1; i <= n; ++i) {
    if (pat.bits[i - 1] == '0') {
      ++j;
      order.push_back(inst.x[j - 1]);
      continue;
    }
    std::fill(banned.begin(), banned.end(), 0);
    if (i <= pat.base) {
      const std::size_t lo = j + 1 > 3 * ellp ? j + 1 - 3 * ellp : 1;
      const std::size_t hi = std::min(three_k, j + 1);
      const std::size_t y_from =
          used_y.size() > 6 * ellp ? used_y.size() - 6 * ellp : 0;
      for (std::size_t m = lo; m <= hi; ++m) {
        const Point xp = inst.x[m - 1];
        for (std::size_t t = y_from; t < used_y.size(); ++t) {
          const Point yp = used_y[t];
          const std::vector<Point> key{std::min(xp, yp), std::max(xp, yp)};
          for (std::uint32_t b : sys.blocks_containing(key)) {
            for (Point q : sys.block(b)) {
              if (q != xp && q != yp) banned[q] = 1;
            }
          }
        }
      }
    }
    Point pick = static_cast<Point>(n);
    for (Point y : inst.y) {
      if (!used[y] && !banned[y]) {
        pick = y;
        break;
      }
    }
    if (pick == n) {
      throw Error(ErrorCode::kGreedyStuck,
                  "no admissible point of Y at position " + std::to_string(i));
    }
    used[pick] = 1;
    used_y.push_back(pick);
    order.push_back(pick);
  }
  return Sequencing::from_order(std::move(order));
}

SegmentReport verify_sequenceable(const BlockSystem& psts,
                                  const Sequencing& seq,
                                  const std::vector<Point>* x_union,
                                  unsigned threads) {
  require_triples(psts);
  if (seq.size() != psts.n()) {
    throw Error(ErrorCode::kInvalidArgument, "sequencing size differs from n");
  }
  std::vector<char> in_x;
  if (x_union != nullptr) {
    in_x.assign(psts.n(), 0);
    for (Point p : *x_union) {
      if (p >= psts.n()) throw Error(ErrorCode::kPointOutOfRange, "X point");
      in_x[p] = 1;
    }
  }
  const std::vector<char>* xs = x_union != nullptr ? &in_x : nullptr;
  SegmentHit best;
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, seq.size()));
  if (workers == 1) {
    best = scan_starts(psts, seq, xs, 0, 1, nullptr);
  } else {
    std::atomic<std::size_t> best_start{std::numeric_limits<std::size_t>::max()};
    std::vector<SegmentHit> hits(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        hits[w] = scan_starts(psts, seq, xs, w, workers, &best_start);
        std::size_t cur = best_start.load();
        while (hits[w].start < cur &&
               !best_start.compare_exchange_weak(cur, hits[w].start)) {
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (SegmentHit& h : hits) {
      if (h.start < best.start) best = std::move(h);
    }
  }
  SegmentReport rep;
  if (best.length != 0) {
    rep.sequenceable = false;
    rep.start = best.start;
    rep.length = best.length;
    rep.cover = std::move(best.cover);
  }
  return rep;
}

}  // namespace blockseq
