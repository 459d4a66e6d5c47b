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

#include "blockseq/core/design.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "blockseq/core/error.hpp"

namespace blockseq {
namespace {

constexpr std::uint64_t kMaxEnumeratedSubsets = 50'000'000;

void check_params(DesignKind kind, std::size_t n, int t, int k, int lambda,
                  bool has_blocks) {
  if (n == 0) throw Error(ErrorCode::kEmptyUniverse, "design has no points");
  auto need = [&](int tt, int kk) {
    if (t != tt || k != kk || lambda != 1) {
      std::ostringstream os;
      os << kind_name(kind) << " requires params " << tt << " " << kk << " 1";
      throw Error(ErrorCode::kBadParameters, os.str());
    }
  };
  switch (kind) {
    case DesignKind::kPSTS:
    case DesignKind::kSTS:
    case DesignKind::kMTS:
    case DesignKind::kDTS:
      need(2, 3);
      break;
    case DesignKind::kSQS:
      need(3, 4);
      break;
    case DesignKind::kBD:
      if (t < 2 || k <= t || lambda < 1) {
        throw Error(ErrorCode::kBadParameters,
                    "BD requires 2 <= t < k and lambda >= 1");
      }
      break;
  }
  if (has_blocks && static_cast<std::size_t>(k) > n) {
    throw Error(ErrorCode::kBadParameters, "block size exceeds point count");
  }
}

void canonicalize(DesignKind kind, Block& b) {
  if (kind == DesignKind::kDTS) return;
  if (kind == DesignKind::kMTS) {
    std::rotate(b.begin(), std::min_element(b.begin(), b.end()), b.end());
    return;
  }
  std::sort(b.begin(), b.end());
}

std::string show(std::span<const Point> pts) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << pts[i];
  os << "}";
  return os.str();
}

// Calls f on every size-r subset of `pts` (as sorted vectors if pts sorted).
template <typename F>
void for_each_subset(const std::vector<Point>& pts, std::size_t r, F&& f) {
  const std::size_t m = pts.size();
  if (r > m) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<Point> cur(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) cur[i] = pts[idx[i]];
    f(cur);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::pair<Point, Point>> directed_edges(DesignKind kind,
                                                   const Block& b) {
  if (kind == DesignKind::kMTS) {
    return {{b[0], b[1]}, {b[1], b[2]}, {b[2], b[0]}};
  }
  return {{b[0], b[1]}, {b[0], b[2]}, {b[1], b[2]}};
}

}  // namespace

std::string_view kind_name(DesignKind kind) {
  switch (kind) {
    case DesignKind::kPSTS: return "PSTS";
    case DesignKind::kSTS: return "STS";
    case DesignKind::kSQS: return "SQS";
    case DesignKind::kMTS: return "MTS";
    case DesignKind::kDTS: return "DTS";
    case DesignKind::kBD: return "BD";
  }
  return "?";
}

std::optional<DesignKind> parse_kind(std::string_view name) {
  for (DesignKind k : {DesignKind::kPSTS, DesignKind::kSTS, DesignKind::kSQS,
                       DesignKind::kMTS, DesignKind::kDTS, DesignKind::kBD}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

bool is_directed(DesignKind kind) {
  return kind == DesignKind::kMTS || kind == DesignKind::kDTS;
}

std::size_t SubsetHash::operator()(const std::vector<Point>& key) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : key) {
    h ^= p + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > static_cast<unsigned __int128>(UINT64_MAX)) {
      throw Error(ErrorCode::kTooLarge, "binomial coefficient overflows");
    }
  }
  return static_cast<std::uint64_t>(c);
}

BlockSystem BlockSystem::build(DesignKind kind, std::size_t n, int t, int k,
                               int lambda, std::vector<Block> blocks,
                               Validation validation) {
  check_params(kind, n, t, k, lambda, !blocks.empty());
  for (Block& b : blocks) {
    if (b.size() != static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::kBadBlockSize,
                  "block " + show(b) + " does not have " + std::to_string(k) +
                      " points");
    }
    for (Point p : b) {
      if (p >= n) {
        throw Error(ErrorCode::kPointOutOfRange,
                    "point " + std::to_string(p) + " outside [0," +
                        std::to_string(n) + ")");
      }
    }
    Block sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kRepeatedPointInBlock,
                  "block " + show(b) + " repeats a point");
    }
    canonicalize(kind, b);
  }
  std::sort(blocks.begin(), blocks.end());
  auto dup = std::adjacent_find(blocks.begin(), blocks.end());
  if (dup != blocks.end()) {
    throw Error(ErrorCode::kDuplicateBlock,
                "duplicate block " + show(*dup));
  }

  BlockSystem sys;
  sys.kind_ = kind;
  sys.n_ = n;
  sys.t_ = t;
  sys.k_ = k;
  sys.lambda_ = lambda;
  sys.blocks_ = std::move(blocks);
  sys.build_indices();

  if (validation == Validation::kStrict) {
    ValidationReport report = validate_system(sys);
    if (!report.valid()) {
      const SubsetViolation& v = report.violations.front();
      std::ostringstream os;
      os << "not a valid " << kind_name(kind) << ": subset " << show(v.subset)
         << " lies in " << v.found << " blocks, "
         << (v.at_most ? "at most " : "") << v.required << " required ("
         << report.violations.size() << " violations)";
      throw Error(ErrorCode::kInvalidDesign, os.str());
    }
  }
  return sys;
}

void BlockSystem::build_indices() {
  incidence_.assign(n_, {});
  for (std::uint32_t i = 0; i < blocks_.size(); ++i) {
    for (Point p : blocks_[i]) incidence_[p].push_back(i);
  }
  index_ = rebuild_completion_index(*this);
}

CompletionIndex rebuild_completion_index(const BlockSystem& sys) {
  CompletionIndex index;
  const auto& blocks = sys.blocks();
  for (std::uint32_t i = 0; i < blocks.size(); ++i) {
    Block sorted = blocks[i];
    std::sort(sorted.begin(), sorted.end());
    for_each_subset(sorted, sorted.size() - 1,
                    [&](const std::vector<Point>& s) { index[s].push_back(i); });
  }
  return index;
}

std::span<const std::uint32_t> BlockSystem::blocks_containing(
    const std::vector<Point>& sorted_key) const {
  auto it = index_.find(sorted_key);
  if (it == index_.end()) return {};
  return it->second;
}

ValidationReport validate_system(const BlockSystem& sys) {
  ValidationReport report;
  std::unordered_map<std::vector<Point>, int, SubsetHash> counts;

  if (sys.directed()) {
    for (const Block& b : sys.blocks()) {
      for (auto [a, c] : directed_edges(sys.kind(), b)) ++counts[{a, c}];
    }
    for (const auto& [edge, count] : counts) {
      if (count > 1) report.violations.push_back({edge, count, 1, true});
    }
  } else {
    const std::size_t t = static_cast<std::size_t>(sys.t());
    for (const Block& b : sys.blocks()) {
      for_each_subset(b, t, [&](const std::vector<Point>& s) { ++counts[s]; });
    }
    const bool at_most = sys.kind() == DesignKind::kPSTS;
    const int required = sys.lambda();
    for (const auto& [subset, count] : counts) {
      if (at_most ? count > required : count != required) {
        report.violations.push_back({subset, count, required, at_most});
      }
    }
    if (!at_most) {
      const std::uint64_t total = binomial(sys.n(), t);
      if (counts.size() < total) {
        if (total > kMaxEnumeratedSubsets) {
          throw Error(ErrorCode::kTooLarge, "too many subsets to enumerate");
        }
        std::vector<Point> all(sys.n());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Point>(i);
        for_each_subset(all, t, [&](const std::vector<Point>& s) {
          if (!counts.contains(s)) {
            report.violations.push_back({s, 0, required, false});
          }
        });
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const SubsetViolation& a, const SubsetViolation& b) {
              return a.subset < b.subset;
            });
  return report;
}

bool order_is_forbidden(DesignKind kind, std::span<const Point> block,
                        std::span<const long long> pos) {
  const std::size_t k = block.size();
  if (kind == DesignKind::kDTS) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (pos[i] >= pos[i + 1]) return false;
    }
    return true;
  }
  if (kind == DesignKind::kMTS) {
    std::size_t j = 0;
    for (std::size_t i = 1; i < k; ++i) {
      if (pos[i] < pos[j]) j = i;
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (pos[(j + i) % k] >= pos[(j + i + 1) % k]) return false;
    }
    return true;
  }
  return true;
}

std::vector<Block> completions(const BlockSystem& sys,
                               std::span<const Point> subset) {
  if (subset.size() >= static_cast<std::size_t>(sys.k())) {
    throw Error(ErrorCode::kSubsetTooLarge,
                "subset must have fewer than k points");
  }
  std::vector<Point> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (Point p : sorted) {
    if (p >= sys.n()) {
      throw Error(ErrorCode::kPointOutOfRange, "subset point out of range");
    }
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kRepeatedPointInBlock, "subset repeats a point");
  }

  std::vector<std::uint32_t> candidates;
  if (sorted.empty()) {
    candidates.resize(sys.num_blocks());
    for (std::uint32_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  } else if (sorted.size() + 1 == static_cast<std::size_t>(sys.k())) {
    auto hits = sys.blocks_containing(sorted);
    candidates.assign(hits.begin(), hits.end());
  } else {
    for (std::uint32_t b : sys.blocks_through(sorted.front())) {
      const Block& blk = sys.block(b);
      bool all = std::all_of(sorted.begin(), sorted.end(), [&](Point p) {
        return std::find(blk.begin(), blk.end(), p) != blk.end();
      });
      if (all) candidates.push_back(b);
    }
  }

  std::vector<Block> out;
  for (std::uint32_t b : candidates) {
    const Block& blk = sys.block(b);
    if (sys.directed() && subset.size() > 1) {
      // Index of each subset point inside the stored block.
      std::vector<std::size_t> at;
      for (Point p : subset) {
        at.push_back(static_cast<std::size_t>(
            std::find(blk.begin(), blk.end(), p) - blk.begin()));
      }
      const std::size_t k = blk.size();
      const std::size_t rotations = sys.kind() == DesignKind::kMTS ? k : 1;
      bool ok = false;
      for (std::size_t r = 0; r < rotations && !ok; ++r) {
        ok = true;
        for (std::size_t i = 0; i + 1 < at.size(); ++i) {
          if ((at[i] + k - r) % k >= (at[i + 1] + k - r) % k) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
    }
    out.push_back(blk);
  }
  return out;
}

}  // namespace blockseq
