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

#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace blockseq::testing {
namespace {

bool is_subsequence(const Block& b, const std::vector<Point>& w) {
  std::size_t i = 0;
  for (Point p : w) {
    if (i < b.size() && b[i] == p) ++i;
  }
  return i == b.size();
}

void subsets(const Block& b, std::size_t t, std::size_t from,
             std::vector<Point>& cur, std::map<std::vector<Point>, int>& count) {
  if (cur.size() == t) {
    ++count[cur];
    return;
  }
  for (std::size_t i = from; i < b.size(); ++i) {
    cur.push_back(b[i]);
    subsets(b, t, i + 1, cur, count);
    cur.pop_back();
  }
}

bool choose(const std::vector<Block>& inside, std::size_t from, std::size_t r,
            std::vector<char>& taken) {
  if (r == 0) return true;
  for (std::size_t i = from; i < inside.size(); ++i) {
    const Block& b = inside[i];
    bool ok = true;
    for (Point p : b) ok = ok && !taken[p];
    if (!ok) continue;
    for (Point p : b) taken[p] = 1;
    const bool found = choose(inside, i + 1, r - 1, taken);
    for (Point p : b) taken[p] = 0;
    if (found) return true;
  }
  return false;
}

using Masks = std::vector<std::uint16_t>;

Masks canonical_masks(const Masks& blocks, std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Masks best;
  Masks cur(blocks.size());
  do {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::uint16_t m = 0;
      for (std::size_t p = 0; p < n; ++p) {
        if (blocks[i] >> p & 1) m |= static_cast<std::uint16_t>(1u << perm[p]);
      }
      cur[i] = m;
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool pair_free(const Masks& blocks, std::uint16_t m) {
  for (std::uint16_t b : blocks) {
    if (__builtin_popcount(b & m) >= 2) return false;
  }
  return true;
}

BlockSystem from_masks(const Masks& masks, std::size_t n) {
  std::vector<Block> blocks;
  for (std::uint16_t m : masks) {
    Block b;
    for (Point p = 0; p < n; ++p) {
      if (m >> p & 1) b.push_back(p);
    }
    blocks.push_back(b);
  }
  return BlockSystem::build(DesignKind::kPSTS, n, 2, 3, 1, blocks);
}

}  // namespace

bool naive_occurs(DesignKind kind, const Block& block,
                  const std::vector<Point>& window) {
  if (kind == DesignKind::kDTS) return is_subsequence(block, window);
  if (kind == DesignKind::kMTS) {
    Block r = block;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (is_subsequence(r, window)) return true;
      std::rotate(r.begin(), r.begin() + 1, r.end());
    }
    return false;
  }
  return std::all_of(block.begin(), block.end(), [&](Point p) {
    return std::find(window.begin(), window.end(), p) != window.end();
  });
}

bool naive_is_good(const BlockSystem& sys, const std::vector<Point>& order,
                   std::size_t ell, bool cyclic) {
  const std::size_t n = order.size();
  const std::size_t width = std::min(ell, n);
  const std::size_t starts = cyclic ? n : (n >= width ? n - width + 1 : 1);
  for (std::size_t s = 0; s < starts; ++s) {
    std::vector<Point> w;
    for (std::size_t i = 0; i < width && (cyclic || s + i < n); ++i) {
      w.push_back(order[(s + i) % n]);
    }
    for (const Block& b : sys.blocks()) {
      if (naive_occurs(sys.kind(), b, w)) return false;
    }
  }
  return true;
}

std::size_t naive_max_good_ell(const BlockSystem& sys,
                               const std::vector<Point>& order, bool cyclic) {
  const std::size_t cap = cyclic ? order.size() - 1 : order.size();
  std::size_t best = 0;
  for (std::size_t ell = 1; ell <= cap; ++ell) {
    if (!naive_is_good(sys, order, ell, cyclic)) break;
    best = ell;
  }
  return best;
}

bool naive_valid(const BlockSystem& sys) {
  const std::size_t n = sys.n();
  if (sys.directed()) {
    std::map<std::pair<Point, Point>, int> edges;
    for (const Block& b : sys.blocks()) {
      if (sys.kind() == DesignKind::kMTS) {
        ++edges[{b[0], b[1]}];
        ++edges[{b[1], b[2]}];
        ++edges[{b[2], b[0]}];
      } else {
        ++edges[{b[0], b[1]}];
        ++edges[{b[0], b[2]}];
        ++edges[{b[1], b[2]}];
      }
    }
    for (Point a = 0; a < n; ++a) {
      for (Point c = 0; c < n; ++c) {
        if (a == c) continue;
        auto it = edges.find({a, c});
        if (it == edges.end() || it->second != 1) return false;
      }
    }
    return true;
  }
  std::map<std::vector<Point>, int> count;
  const std::size_t t = static_cast<std::size_t>(sys.t());
  for (Block b : sys.blocks()) {
    std::sort(b.begin(), b.end());
    std::vector<Point> cur;
    subsets(b, t, 0, cur, count);
  }
  for (const auto& [s, c] : count) {
    if (sys.kind() == DesignKind::kPSTS ? c > 1 : c != sys.lambda()) {
      return false;
    }
  }
  if (sys.kind() == DesignKind::kPSTS) return true;
  // Every t-subset must be present.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < t; ++i) total = total * (n - i) / (i + 1);
  return count.size() == total;
}

bool naive_pattern_a(const std::string& bits) {
  for (std::size_t len = 3; len <= bits.size(); len += 3) {
    for (std::size_t s = 0; s + len <= bits.size(); ++s) {
      const auto z = std::count(bits.begin() + s, bits.begin() + s + len, '0');
      if (static_cast<std::size_t>(z) > len / 3) return false;
    }
  }
  return true;
}

bool naive_pattern_b(const std::string& bits, std::size_t base) {
  for (std::size_t len = 3; len <= bits.size(); len += 3) {
    for (std::size_t s = 0; s + len <= bits.size(); ++s) {
      if (s + len < base + 1) continue;  // 1-based end position s + len
      const auto z = std::count(bits.begin() + s, bits.begin() + s + len, '0');
      if (static_cast<std::size_t>(z) + 1 > len / 3) return false;
    }
  }
  return true;
}

bool naive_pattern_c(const std::string& bits, std::size_t ellp) {
  for (std::size_t r = 3 * ellp + 1; 3 * r <= bits.size(); ++r) {
    for (std::size_t s = 0; s + 3 * r <= bits.size(); ++s) {
      const auto z = std::count(bits.begin() + s, bits.begin() + s + 3 * r, '0');
      if (static_cast<std::size_t>(z) + 1 > r) return false;
    }
  }
  return true;
}

std::size_t naive_max_disjoint(const BlockSystem& sys) {
  const std::size_t b = sys.num_blocks();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
    std::vector<char> used(sys.n(), 0);
    bool ok = true;
    std::size_t count = 0;
    for (std::size_t i = 0; i < b && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ++count;
      for (Point p : sys.block(i)) {
        if (used[p]) ok = false;
        used[p] = 1;
      }
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

bool naive_has_bad_segment(const BlockSystem& sys,
                           const std::vector<Point>& order) {
  for (std::size_t len = 3; len <= order.size(); len += 3) {
    for (std::size_t s = 0; s + len <= order.size(); ++s) {
      std::set<Point> seg(order.begin() + s, order.begin() + s + len);
      std::vector<Block> inside;
      for (const Block& b : sys.blocks()) {
        if (std::all_of(b.begin(), b.end(),
                        [&](Point p) { return seg.count(p) > 0; })) {
          inside.push_back(b);
        }
      }
      std::vector<char> taken(sys.n(), 0);
      if (choose(inside, 0, len / 3, taken)) return true;
    }
  }
  return false;
}

std::vector<BlockSystem> enumerate_psts(std::size_t n, std::size_t max_blocks) {
  std::vector<std::uint16_t> triples;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        triples.push_back(
            static_cast<std::uint16_t>((1u << a) | (1u << b) | (1u << c)));
      }
    }
  }
  std::vector<BlockSystem> out;
  std::set<Masks> level = {Masks{}};
  out.push_back(from_masks({}, n));
  for (std::size_t size = 1; size <= max_blocks; ++size) {
    std::set<Masks> raw;
    for (const Masks& rep : level) {
      for (std::uint16_t t : triples) {
        if (std::find(rep.begin(), rep.end(), t) != rep.end()) continue;
        if (!pair_free(rep, t)) continue;
        Masks next = rep;
        next.push_back(t);
        std::sort(next.begin(), next.end());
        raw.insert(next);
      }
    }
    std::set<Masks> canon;
    for (const Masks& m : raw) canon.insert(canonical_masks(m, n));
    for (const Masks& m : canon) out.push_back(from_masks(m, n));
    level = std::move(canon);
    if (level.empty()) break;
  }
  return out;
}

BlockSystem random_psts(std::size_t n, std::size_t attempts,
                        std::mt19937_64& rng) {
  std::vector<Block> blocks;
  std::set<std::pair<Point, Point>> pairs;
  std::uniform_int_distribution<Point> pick(0, static_cast<Point>(n - 1));
  for (std::size_t i = 0; i < attempts; ++i) {
    Block b{pick(rng), pick(rng), pick(rng)};
    std::sort(b.begin(), b.end());
    if (b[0] == b[1] || b[1] == b[2]) continue;
    if (pairs.count({b[0], b[1]}) || pairs.count({b[0], b[2]}) ||
        pairs.count({b[1], b[2]})) {
      continue;
    }
    pairs.insert({b[0], b[1]});
    pairs.insert({b[0], b[2]});
    pairs.insert({b[1], b[2]});
    blocks.push_back(b);
  }
  return BlockSystem::build(DesignKind::kPSTS, n, 2, 3, 1, blocks);
}

std::uint64_t bob_pairing_line_count(std::size_t n) {
  // After the first exchange 2p + 1 points remain: u and p pairs. Alice
  // either plays u (one finished line) or one of 2p paired points.
  std::uint64_t f = 1;
  const std::size_t pairs = (n - 3) / 2;
  for (std::size_t p = 1; p <= pairs; ++p) f = 1 + 2 * p * f;
  return n * f;
}

}  // namespace blockseq::testing
