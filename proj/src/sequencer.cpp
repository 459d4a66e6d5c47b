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

#include "blockseq/core/sequencer.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "blockseq/core/error.hpp"

namespace blockseq {
namespace {

constexpr long long kUnplaced = std::numeric_limits<long long>::min();

// Points at explicit positions of a partial linear arrangement.
class Layout {
 public:
  explicit Layout(const BlockSystem& sys)
      : sys_(sys), pos_(sys.n(), kUnplaced), scratch_(sys.k()) {}

  void place(Point p, long long at) { pos_[p] = at; }
  void clear(Point p) { pos_[p] = kUnplaced; }
  bool placed(Point p) const { return pos_[p] != kUnplaced; }

  // Whether a fully placed block through p sits inside a window of length
  // at most ell in a forbidden order.
  bool violates(Point p, std::size_t ell) {
    const std::size_t k = scratch_.size();
    for (std::uint32_t bi : sys_.blocks_through(p)) {
      const Block& b = sys_.block(bi);
      long long lo = std::numeric_limits<long long>::max();
      long long hi = std::numeric_limits<long long>::min();
      bool all = true;
      for (std::size_t i = 0; i < k; ++i) {
        const long long at = pos_[b[i]];
        if (at == kUnplaced) {
          all = false;
          break;
        }
        scratch_[i] = at;
        lo = std::min(lo, at);
        hi = std::max(hi, at);
      }
      if (!all || hi - lo + 1 > static_cast<long long>(ell)) continue;
      if (order_is_forbidden(sys_.kind(), b, scratch_)) return true;
    }
    return false;
  }

  // Places p at `at`, keeps it when no violation arises.
  bool try_place(Point p, long long at, std::size_t ell) {
    place(p, at);
    if (violates(p, ell)) {
      clear(p);
      return false;
    }
    return true;
  }

 private:
  const BlockSystem& sys_;
  std::vector<long long> pos_;
  std::vector<long long> scratch_;
};

class Chooser {
 public:
  explicit Chooser(TieRule tie) : tie_(tie), rng_(tie.seed) {}

  // First eligible candidate (candidates in ascending id), or a uniformly
  // random eligible one in random mode.
  template <typename Eligible>
  std::optional<Point> pick(std::span<const Point> candidates,
                            Eligible&& eligible) {
    if (tie_.mode == TieRule::Mode::kMin) {
      for (Point p : candidates) {
        if (eligible(p)) return p;
      }
      return std::nullopt;
    }
    std::vector<Point> ok;
    for (Point p : candidates) {
      if (eligible(p)) ok.push_back(p);
    }
    if (ok.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> d(0, ok.size() - 1);
    return ok[d(rng_)];
  }

 private:
  TieRule tie_;
  std::mt19937_64 rng_;
};

// The growing linear partial sequencing of an engine run.
class Builder {
 public:
  Builder(const BlockSystem& sys, std::size_t ell)
      : sys_(sys), ell_(ell), layout_(sys), used_(sys.n(), 0) {}

  bool can_append(Point p) {
    if (used_[p]) return false;
    layout_.place(p, static_cast<long long>(seq_.size()));
    const bool bad = layout_.violates(p, ell_);
    layout_.clear(p);
    return !bad;
  }

  void append(Point p) {
    if (!can_append(p)) {
      throw Error(ErrorCode::kInternal,
                  "engine appended a point that breaks goodness");
    }
    layout_.place(p, static_cast<long long>(seq_.size()));
    seq_.push_back(p);
    used_[p] = 1;
  }

  bool used(Point p) const { return used_[p] != 0; }
  const std::vector<Point>& seq() const { return seq_; }

  std::vector<Point> unused() const {
    std::vector<Point> out;
    for (Point p = 0; p < sys_.n(); ++p) {
      if (!used_[p]) out.push_back(p);
    }
    return out;
  }

  std::span<const Point> last(std::size_t count) const {
    const std::size_t c = std::min(count, seq_.size());
    return std::span<const Point>(seq_).subspan(seq_.size() - c);
  }

 private:
  const BlockSystem& sys_;
  std::size_t ell_;
  Layout layout_;
  std::vector<char> used_;
  std::vector<Point> seq_;
};

std::vector<Point> all_points(std::size_t n) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  return v;
}

void greedy_fill(Builder& b, Chooser& chooser, std::size_t count, int stage) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::vector<Point> cand = b.unused();
    auto p = chooser.pick(cand, [&](Point q) { return b.can_append(q); });
    if (!p) {
      throw StageFailed(stage, "no eligible point at position " +
                                   std::to_string(b.seq().size()));
    }
    b.append(*p);
  }
}

std::vector<std::vector<Point>> split_segments(const std::vector<Point>& seq,
                                               std::size_t len,
                                               std::size_t count) {
  std::vector<std::vector<Point>> out;
  for (std::size_t j = 0; j < count; ++j) {
    out.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(j * len),
                     seq.begin() + static_cast<std::ptrdiff_t>((j + 1) * len));
  }
  return out;
}

// Stages 2 and 3: consume every unfortunate point, leaving at most `keep`
// for reachability and placing those through reachability_extend.
void absorb_unfortunate(const BlockSystem& sys, std::size_t ell, Builder& b,
                        Chooser& chooser, const TieRule& tie,
                        std::vector<Point> remaining, std::size_t keep) {
  while (remaining.size() > keep) {
    auto p = chooser.pick(remaining, [&](Point q) { return b.can_append(q); });
    if (!p) throw StageFailed(2, "no unfortunate point can extend the tail");
    b.append(*p);
    remaining.erase(std::find(remaining.begin(), remaining.end(), *p));
  }
  while (!remaining.empty()) {
    const Point u = remaining.front();
    remaining.erase(remaining.begin());
    std::vector<Point> pool;
    for (Point q : b.unused()) {
      if (q != u &&
          !std::binary_search(remaining.begin(), remaining.end(), q)) {
        pool.push_back(q);
      }
    }
    std::vector<Point> ws;
    try {
      ws = reachability_extend(sys, ell, b.last(ell - 1), pool, u, tie);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kReachabilityFailed) throw;
      throw StageFailed(3, e.what());
    }
    for (Point w : ws) b.append(w);
    b.append(u);
  }
}

void check_result(const BlockSystem& sys, const Sequencing& seq,
                  std::size_t ell, bool cyclic) {
  if (first_violation(sys, seq, ell, cyclic)) {
    throw Error(ErrorCode::kInternal,
                "engine output failed its own goodness check");
  }
}

}  // namespace

PropertyConstants constants_for(DesignKind kind, std::size_t ell, int t, int k,
                                int lambda) {
  if (ell < 1) throw Error(ErrorCode::kInvalidArgument, "ell must be >= 1");
  const std::uint64_t l = ell;
  PropertyConstants c;
  c.s = l - 1;
  c.sp = l - 1;
  switch (kind) {
    case DesignKind::kPSTS:
    case DesignKind::kSTS:
    case DesignKind::kMTS:
    case DesignKind::kDTS: {
      const std::uint64_t c2 = binomial(l - 1, 2);
      c.L = c.Lp = c.K = kind == DesignKind::kDTS ? binomial(l, 2) : c2;
      c.J = c2 + 2 * l;
      c.Kp = 3 * c2 + l - 1;
      c.symmetric = kind != DesignKind::kDTS;
      return c;
    }
    case DesignKind::kSQS:
      t = 3;
      k = 4;
      lambda = 1;
      [[fallthrough]];
    case DesignKind::kBD: {
      if (t < 2 || k <= t || lambda < 1) {
        throw Error(ErrorCode::kBadParameters, "need 2 <= t < k, lambda >= 1");
      }
      const std::uint64_t lam = static_cast<std::uint64_t>(lambda);
      const std::uint64_t num = lam * binomial(l - 1, t);
      const std::uint64_t den = binomial(k - 1, t);
      c.L = c.Lp = (num + den - 1) / den;
      c.K = lam * binomial(2 * (l - 1), t);
      c.J = c.L + l - 1 + lam * binomial(l - 1, t - 1);
      c.Kp = c.K + l - 1;
      c.symmetric = true;
      return c;
    }
  }
  throw Error(ErrorCode::kUnsupportedKind, "unsupported design kind");
}

PropertyConstants constants_for(const BlockSystem& sys, std::size_t ell) {
  return constants_for(sys.kind(), ell, sys.t(), sys.k(), sys.lambda());
}

std::uint64_t threshold_psts(std::size_t ell) {
  const std::uint64_t c = binomial(ell == 0 ? 0 : ell - 1, 2);
  return std::max<std::uint64_t>(3, (2 * ell + 3 * c) * c + ell);
}

std::uint64_t threshold_general(const PropertyConstants& c, std::size_t ell) {
  const std::uint64_t inner = c.symmetric ? c.L + c.K : c.L + c.Lp + c.K;
  return ell * c.L + inner * c.L + c.s * c.L + c.J;
}

std::uint64_t threshold_cyclic(const PropertyConstants& c, std::size_t ell) {
  if (c.Kp < c.sp) {
    throw Error(ErrorCode::kConstantsInconsistent, "Kp must be at least sp");
  }
  const long long m = static_cast<long long>(c.Kp - c.sp);
  const long long l = static_cast<long long>(ell);
  const long long inner = static_cast<long long>(
      c.symmetric ? c.L + c.K : c.L + c.Lp + c.K);
  const long long v = m * l + l + m * inner +
                      (static_cast<long long>(c.s) - 1) *
                          static_cast<long long>(c.L) +
                      static_cast<long long>(c.J + c.Kp);
  return static_cast<std::uint64_t>(std::max(0LL, v));
}

std::optional<Sequencing> naive_greedy(const BlockSystem& sys, std::size_t ell,
                                       bool cyclic_check, TieRule tie) {
  Builder b(sys, ell);
  Chooser chooser(tie);
  for (std::size_t i = 0; i < sys.n(); ++i) {
    const std::vector<Point> cand = b.unused();
    auto p = chooser.pick(cand, [&](Point q) { return b.can_append(q); });
    if (!p) return std::nullopt;
    b.append(*p);
  }
  Sequencing seq = Sequencing::from_order(b.seq());
  if (cyclic_check && first_violation(sys, seq, ell, true)) return std::nullopt;
  return seq;
}

std::vector<Point> unfortunate_set(
    const BlockSystem& sys, std::size_t ell,
    const std::vector<std::vector<Point>>& segments, bool leading_gap) {
  std::vector<char> in_segment(sys.n(), 0);
  for (const auto& seg : segments) {
    for (Point p : seg) in_segment[p] = 1;
  }
  std::vector<Point> candidates;
  for (Point p = 0; p < sys.n(); ++p) {
    if (!in_segment[p]) candidates.push_back(p);
  }
  std::vector<char> bad(sys.n(), 0);
  Layout layout(sys);
  const std::vector<Point> none;
  auto check_gap = [&](const std::vector<Point>& left,
                       const std::vector<Point>& right) {
    const long long gap = static_cast<long long>(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      layout.place(left[i], static_cast<long long>(i));
    }
    for (std::size_t i = 0; i < right.size(); ++i) {
      layout.place(right[i], gap + 1 + static_cast<long long>(i));
    }
    for (Point y : candidates) {
      if (bad[y]) continue;
      layout.place(y, gap);
      if (layout.violates(y, ell)) bad[y] = 1;
      layout.clear(y);
    }
    for (Point p : left) layout.clear(p);
    for (Point p : right) layout.clear(p);
  };
  if (leading_gap && !segments.empty()) check_gap(none, segments.front());
  for (std::size_t j = 1; j < segments.size(); ++j) {
    check_gap(segments[j - 1], segments[j]);
  }
  std::vector<Point> out;
  for (Point y : candidates) {
    if (bad[y]) out.push_back(y);
  }
  return out;
}

std::vector<Point> reachability_extend(const BlockSystem& sys, std::size_t ell,
                                       std::span<const Point> prefix_window,
                                       std::span<const Point> pool, Point u,
                                       TieRule tie) {
  if (ell < 1) throw Error(ErrorCode::kInvalidArgument, "ell must be >= 1");
  const std::size_t s = ell - 1;
  Layout layout(sys);
  const long long base = static_cast<long long>(prefix_window.size());
  for (std::size_t i = 0; i < prefix_window.size(); ++i) {
    layout.place(prefix_window[i], static_cast<long long>(i));
  }
  layout.place(u, base + static_cast<long long>(s));
  std::vector<Point> sorted_pool(pool.begin(), pool.end());
  std::sort(sorted_pool.begin(), sorted_pool.end());
  Chooser chooser(tie);
  std::vector<Point> out;
  for (std::size_t i = 0; i < s; ++i) {
    const long long at = base + static_cast<long long>(i);
    auto w = chooser.pick(sorted_pool, [&](Point q) {
      if (layout.placed(q)) return false;
      layout.place(q, at);
      const bool bad = layout.violates(q, ell);
      layout.clear(q);
      return !bad;
    });
    if (!w) {
      throw Error(ErrorCode::kReachabilityFailed,
                  "no pool point can precede the target at step " +
                      std::to_string(i + 1));
    }
    layout.place(*w, at);
    out.push_back(*w);
  }
  // A target that clashes with the prefix and nothing else is impossible
  // here: such a block spans more than ell positions.
  if (layout.violates(u, ell)) {
    throw Error(ErrorCode::kReachabilityFailed, "target cannot be reached");
  }
  return out;
}

std::vector<Point> completion_bridge(const BlockSystem& sys, std::size_t ell,
                                     std::span<const Point> x_end,
                                     std::span<const Point> x_start,
                                     std::span<const Point> available,
                                     TieRule tie) {
  if (ell < 1) throw Error(ErrorCode::kInvalidArgument, "ell must be >= 1");
  const std::size_t s = ell - 1;
  Layout layout(sys);
  const long long e = static_cast<long long>(x_end.size());
  for (std::size_t i = 0; i < x_end.size(); ++i) {
    layout.place(x_end[i], static_cast<long long>(i));
  }
  for (std::size_t i = 0; i < x_start.size(); ++i) {
    if (layout.placed(x_start[i])) {
      throw Error(ErrorCode::kInvalidArgument, "bridge ends overlap");
    }
    layout.place(x_start[i],
                 e + static_cast<long long>(s) + static_cast<long long>(i));
  }
  std::vector<Point> sorted(available.begin(), available.end());
  std::sort(sorted.begin(), sorted.end());
  Chooser chooser(tie);
  std::vector<Point> out;
  for (std::size_t i = 0; i < s; ++i) {
    const long long at = e + static_cast<long long>(i);
    auto y = chooser.pick(sorted, [&](Point q) {
      if (layout.placed(q)) return false;
      layout.place(q, at);
      const bool bad = layout.violates(q, ell);
      layout.clear(q);
      return !bad;
    });
    if (!y) {
      throw Error(ErrorCode::kCompletionFailed,
                  "no available point fits bridge slot " +
                      std::to_string(i + 1));
    }
    layout.place(*y, at);
    out.push_back(*y);
  }
  return out;
}

StagedResult staged_greedy_traced(const BlockSystem& sys, std::size_t ell,
                                  const StagedOptions& options) {
  const PropertyConstants c = constants_for(sys, ell);
  if (options.strict && sys.n() < threshold_general(c, ell)) {
    throw Error(ErrorCode::kInvalidArgument,
                "n = " + std::to_string(sys.n()) + " is below the threshold " +
                    std::to_string(threshold_general(c, ell)));
  }
  StagedResult result;
  const std::size_t L = c.L;
  if (L == 0) {
    auto seq = naive_greedy(sys, ell, false, options.tie);
    if (!seq) throw StageFailed(4, "greedy stuck with no segments");
    result.state.tail = seq->order();
    result.sequencing = std::move(*seq);
    check_result(sys, result.sequencing, ell, false);
    return result;
  }

  Builder b(sys, ell);
  Chooser chooser(options.tie);
  const std::size_t seg_len = ell - 1;
  greedy_fill(b, chooser, seg_len * L, 1);
  StagedState& st = result.state;
  st.segments = split_segments(b.seq(), seg_len, L);
  st.v_prime = b.unused();
  st.unfortunate = unfortunate_set(sys, ell, st.segments, true);
  if (st.unfortunate.size() > (c.L + c.Lp + c.K) * c.L) {
    throw Error(ErrorCode::kInternal, "unfortunate set exceeds its bound");
  }

  absorb_unfortunate(sys, ell, b, chooser, options.tie, st.unfortunate, L);

  const std::size_t left = b.unused().size();
  if (left < L) throw StageFailed(4, "fewer than L points remain");
  greedy_fill(b, chooser, left - L, 4);

  st.gaps = b.unused();
  st.tail.assign(b.seq().begin() + static_cast<std::ptrdiff_t>(seg_len * L),
                 b.seq().end());
  std::vector<Point> order;
  for (std::size_t j = 0; j < L; ++j) {
    order.push_back(st.gaps[j]);
    order.insert(order.end(), st.segments[j].begin(), st.segments[j].end());
  }
  order.insert(order.end(), st.tail.begin(), st.tail.end());
  result.sequencing = Sequencing::from_order(std::move(order));
  check_result(sys, result.sequencing, ell, false);
  return result;
}

Sequencing staged_greedy(const BlockSystem& sys, std::size_t ell,
                         const StagedOptions& options) {
  return staged_greedy_traced(sys, ell, options).sequencing;
}

StagedResult cyclic_staged_greedy_traced(const BlockSystem& sys,
                                         std::size_t ell,
                                         const StagedOptions& options) {
  const PropertyConstants c = constants_for(sys, ell);
  const std::uint64_t threshold = threshold_cyclic(c, ell);
  if (options.strict && sys.n() < threshold) {
    throw Error(ErrorCode::kInvalidArgument,
                "n = " + std::to_string(sys.n()) + " is below the threshold " +
                    std::to_string(threshold));
  }
  StagedResult result;
  if (c.L == 0) {
    // No window of length ell can hold a block.
    result.sequencing = Sequencing::from_order(all_points(sys.n()));
    result.state.tail = result.sequencing.order();
    check_result(sys, result.sequencing, ell, true);
    return result;
  }

  const std::size_t M = c.Kp - c.sp;
  const std::size_t seg_len = ell - 1;
  Builder b(sys, ell);
  Chooser chooser(options.tie);
  greedy_fill(b, chooser, seg_len * (M + 1), 1);
  StagedState& st = result.state;
  st.segments = split_segments(b.seq(), seg_len, M + 1);
  st.v_prime = b.unused();
  st.unfortunate = unfortunate_set(sys, ell, st.segments, false);

  absorb_unfortunate(sys, ell, b, chooser, options.tie, st.unfortunate, c.L);

  const std::size_t left = b.unused().size();
  if (left < c.Kp) throw StageFailed(4, "fewer than Kp points remain");
  greedy_fill(b, chooser, left - c.Kp, 4);

  const std::vector<Point> y_set = b.unused();
  try {
    st.bridge = completion_bridge(sys, ell, b.last(seg_len), st.segments[0],
                                  y_set, options.tie);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCompletionFailed) throw;
    throw StageFailed(5, e.what());
  }
  for (Point y : y_set) {
    if (std::find(st.bridge.begin(), st.bridge.end(), y) == st.bridge.end()) {
      st.gaps.push_back(y);
    }
  }
  st.tail.assign(
      b.seq().begin() + static_cast<std::ptrdiff_t>(seg_len * (M + 1)),
      b.seq().end());

  std::vector<Point> order(st.segments[0]);
  for (std::size_t i = 1; i <= M; ++i) {
    order.push_back(st.gaps[i - 1]);
    order.insert(order.end(), st.segments[i].begin(), st.segments[i].end());
  }
  order.insert(order.end(), st.tail.begin(), st.tail.end());
  order.insert(order.end(), st.bridge.begin(), st.bridge.end());
  result.sequencing = Sequencing::from_order(std::move(order));
  check_result(sys, result.sequencing, ell, true);
  return result;
}

Sequencing cyclic_staged_greedy(const BlockSystem& sys, std::size_t ell,
                                const StagedOptions& options) {
  return cyclic_staged_greedy_traced(sys, ell, options).sequencing;
}

}  // namespace blockseq
