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

#include "blockseq/core/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "blockseq/core/error.hpp"

namespace blockseq {

SkolemPairs okeefe_pairs(std::size_t m) {
  if (m < 2 || m % 4 != 2) {
    throw Error(ErrorCode::kBadResidue,
                "order " + std::to_string(m) + " is not 2 mod 4");
  }
  const std::uint32_t k = static_cast<std::uint32_t>((m - 2) / 4);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rows;
  if (k == 0) {
    // The general rows collide at k = 0; order 2 has the single solution below.
    return {m, {{1, 2}, {3, 5}}};
  }
  for (std::uint32_t r = 1; r <= 2 * k; ++r) rows.emplace_back(r, 4 * k + 2 - r);
  rows.emplace_back(2 * k + 1, 6 * k + 2);
  rows.emplace_back(4 * k + 2, 6 * k + 3);
  rows.emplace_back(4 * k + 3, 8 * k + 5);
  for (std::uint32_t r = 1; r + 1 <= k; ++r) {
    rows.emplace_back(4 * k + 3 + r, 8 * k + 4 - r);
  }
  for (std::uint32_t r = 1; r + 1 <= k; ++r) {
    rows.emplace_back(5 * k + 2 + r, 7 * k + 3 - r);
  }
  rows.emplace_back(7 * k + 3, 7 * k + 4);

  SkolemPairs out;
  out.m = m;
  out.pairs.assign(m, {0, 0});
  for (auto [a, b] : rows) {
    const std::uint32_t d = b - a;
    if (d < 1 || d > m || out.pairs[d - 1].second != 0) {
      throw Error(ErrorCode::kInternal, "hooked Skolem rows are inconsistent");
    }
    out.pairs[d - 1] = {a, b};
  }
  return out;
}

SystemWithSequencing skolem_sts(std::size_t m) {
  const SkolemPairs sk = okeefe_pairs(m);
  const std::size_t n = 6 * m + 1;
  std::vector<Block> blocks;
  blocks.reserve(m * n);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t b = sk.pairs[i - 1].second;
    for (std::size_t x = 0; x < n; ++x) {
      blocks.push_back({static_cast<Point>(x), static_cast<Point>((x + i) % n),
                        static_cast<Point>((x + m + b) % n)});
    }
  }
  return {BlockSystem::build(DesignKind::kSTS, n, 2, 3, 1, std::move(blocks)),
          natural_sequencing(n)};
}

BlockSystem hamming_sts(int r) {
  if (r < 2 || r > 20) {
    throw Error(ErrorCode::kInvalidArgument, "hamming_sts needs 2 <= r <= 20");
  }
  const std::uint32_t n = (1u << r) - 1;
  std::vector<Block> blocks;
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = a + 1; b <= n; ++b) {
      const std::uint32_t c = a ^ b;
      if (c > b) blocks.push_back({a - 1, b - 1, c - 1});
    }
  }
  return BlockSystem::build(DesignKind::kSTS, n, 2, 3, 1, std::move(blocks));
}

BlockSystem affine_sts(int r) {
  if (r < 1 || r > 12) {
    throw Error(ErrorCode::kInvalidArgument, "affine_sts needs 1 <= r <= 12");
  }
  std::uint32_t n = 1;
  for (int i = 0; i < r; ++i) n *= 3;
  auto third = [r](std::uint32_t x, std::uint32_t y) {
    std::uint32_t z = 0, scale = 1;
    for (int i = 0; i < r; ++i) {
      const std::uint32_t d = (6 - x % 3 - y % 3) % 3;
      z += d * scale;
      scale *= 3;
      x /= 3;
      y /= 3;
    }
    return z;
  };
  std::vector<Block> blocks;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      const std::uint32_t z = third(x, y);
      if (z > y) blocks.push_back({x, y, z});
    }
  }
  return BlockSystem::build(DesignKind::kSTS, n, 2, 3, 1, std::move(blocks));
}

BlockSystem boolean_sqs(int r) {
  if (r < 2 || r > 12) {
    throw Error(ErrorCode::kInvalidArgument, "boolean_sqs needs 2 <= r <= 12");
  }
  const std::uint32_t n = 1u << r;
  std::vector<Block> blocks;
  for (std::uint32_t w = 0; w < n; ++w) {
    for (std::uint32_t x = w + 1; x < n; ++x) {
      for (std::uint32_t y = x + 1; y < n; ++y) {
        const std::uint32_t z = w ^ x ^ y;
        if (z > y) blocks.push_back({w, x, y, z});
      }
    }
  }
  return BlockSystem::build(DesignKind::kSQS, n, 3, 4, 1, std::move(blocks));
}

OneFactorization circle_one_factorization(std::size_t m) {
  if (m < 2 || m % 2 != 0) {
    throw Error(ErrorCode::kOddOrder,
                "one-factorization needs an even vertex count, got " +
                    std::to_string(m));
  }
  OneFactorization f;
  f.m = m;
  const std::size_t q = m - 1;
  auto edge = [](std::size_t a, std::size_t b) {
    return std::pair<Point, Point>(static_cast<Point>(std::min(a, b)),
                                   static_cast<Point>(std::max(a, b)));
  };
  for (std::size_t i = 1; i <= q; ++i) {
    std::vector<std::pair<Point, Point>> factor;
    factor.push_back(edge(m - 1, i - 1));
    for (std::size_t j = 1; j < m / 2; ++j) {
      factor.push_back(edge((i - 1 + j) % q, (i - 1 + q - j % q) % q));
    }
    f.factors.push_back(std::move(factor));
  }
  return f;
}

SystemWithSequencing sqs_quadruple(const BlockSystem& base) {
  const std::size_t m = base.n();
  if (base.kind() != DesignKind::kSQS || m % 2 != 0 ||
      !validate_system(base).valid()) {
    throw Error(ErrorCode::kInvalidBase,
                "base must be a valid SQS on an even number of points");
  }
  const OneFactorization f = circle_one_factorization(m);
  auto at = [m](int part, std::size_t x) {
    return static_cast<Point>((part - 1) * m + x);
  };
  std::vector<Block> blocks;

  for (const Block& b : base.blocks()) {
    for (std::size_t w = 0; w < 4; ++w) {
      std::vector<std::size_t> xyz;
      for (std::size_t i = 0; i < 4; ++i) {
        if (i != w) xyz.push_back(b[i]);
      }
      const std::size_t ww = b[w];
      blocks.push_back({at(1, xyz[0]), at(1, xyz[1]), at(1, xyz[2]), at(3, ww)});
      blocks.push_back({at(2, xyz[0]), at(2, xyz[1]), at(2, xyz[2]), at(4, ww)});
      blocks.push_back({at(1, ww), at(3, xyz[0]), at(3, xyz[1]), at(3, xyz[2])});
      blocks.push_back({at(2, ww), at(4, xyz[0]), at(4, xyz[1]), at(4, xyz[2])});
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      blocks.push_back({at(1, a), at(1, b), at(3, a), at(3, b)});
      blocks.push_back({at(2, a), at(2, b), at(4, a), at(4, b)});
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const std::size_t factor = (i + m - j) % m;
      for (auto [u, v] : f.factors[factor - 1]) {
        blocks.push_back({at(1, i), at(2, u), at(2, v), at(3, j)});
        blocks.push_back({at(2, i), at(3, u), at(3, v), at(4, j)});
        blocks.push_back({at(1, j), at(3, i), at(4, u), at(4, v)});
        blocks.push_back({at(1, u), at(1, v), at(2, j), at(4, i)});
      }
      blocks.push_back({at(1, i), at(2, j), at(3, i), at(4, j)});
    }
  }
  for (std::size_t r = 0; r < m; ++r) {
    blocks.push_back({at(1, r), at(2, r), at(3, r), at(4, r)});
  }
  return {BlockSystem::build(DesignKind::kSQS, 4 * m, 3, 4, 1,
                             std::move(blocks)),
          natural_sequencing(4 * m)};
}

Sequencing natural_sequencing(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kEmptyUniverse, "empty universe");
  std::vector<Point> order(n);
  std::iota(order.begin(), order.end(), Point{0});
  return Sequencing::from_order(std::move(order));
}

}  // namespace blockseq
