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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>

#include "blockseq/core/constructions.hpp"
#include "blockseq/core/goodness.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace blockseq;
using blockseq::testing::error_of;
using blockseq::testing::naive_valid;

namespace {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Hooked Skolem conditions: differences 1..m in order, covering
// {1..2m-1} and 2m+1 exactly once.
void check_hooked(const SkolemPairs& sk) {
  const std::size_t m = sk.m;
  REQUIRE(sk.pairs.size() == m);
  std::multiset<std::uint32_t> covered;
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, b] = sk.pairs[i];
    CHECK(b - a == i + 1);
    covered.insert(a);
    covered.insert(b);
  }
  std::multiset<std::uint32_t> want;
  for (std::uint32_t v = 1; v < 2 * m; ++v) want.insert(v);
  want.insert(static_cast<std::uint32_t>(2 * m + 1));
  CHECK(covered == want);
}

}  // namespace

TEST_CASE("O'Keefe pairs for m = 6") {
  const SkolemPairs sk = okeefe_pairs(6);
  CHECK(sk.pairs == Pairs{{10, 11}, {2, 4}, {6, 9}, {1, 5}, {3, 8}, {7, 13}});
  check_hooked(sk);
}

TEST_CASE("O'Keefe pairs for m = 10") {
  const SkolemPairs sk = okeefe_pairs(10);
  CHECK(sk.pairs[0] == std::pair<std::uint32_t, std::uint32_t>{17, 18});
  CHECK(sk.pairs[9] == std::pair<std::uint32_t, std::uint32_t>{11, 21});
  check_hooked(sk);
}

TEST_CASE("O'Keefe pairs are hooked Skolem for every m = 2 mod 4 up to 202") {
  for (std::size_t m = 2; m <= 202; m += 4) check_hooked(okeefe_pairs(m));
}

TEST_CASE("O'Keefe pairs reject other residues") {
  for (std::size_t m : {0u, 1u, 3u, 4u, 5u, 8u, 12u}) {
    CHECK(error_of([m] { okeefe_pairs(m); }) == ErrorCode::kBadResidue);
  }
}

TEST_CASE("Skolem STS") {
  const SystemWithSequencing s6 = skolem_sts(6);
  CHECK(s6.system.n() == 37);
  CHECK(s6.system.num_blocks() == 222);
  CHECK(naive_valid(s6.system));
  CHECK(s6.sequencing == natural_sequencing(37));
  for (Point x = 0; x < 37; ++x) {
    Block b{x, (x + 2) % 37, (x + 10) % 37};
    std::sort(b.begin(), b.end());
    CHECK(std::binary_search(s6.system.blocks().begin(),
                             s6.system.blocks().end(), b));
  }
  const SystemWithSequencing s10 = skolem_sts(10);
  CHECK(s10.system.n() == 61);
  CHECK(s10.system.num_blocks() == 610);
  CHECK(naive_valid(s10.system));
}

TEST_CASE("Hamming STS") {
  CHECK(hamming_sts(2).num_blocks() == 1);
  CHECK(hamming_sts(2).block(0) == Block{0, 1, 2});
  CHECK(hamming_sts(3).num_blocks() == 7);
  CHECK(hamming_sts(4).num_blocks() == 35);
  for (int r = 2; r <= 6; ++r) CHECK(naive_valid(hamming_sts(r)));
  CHECK(error_of([] { hamming_sts(1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("affine STS") {
  const BlockSystem a2 = affine_sts(2);
  CHECK(a2.n() == 9);
  CHECK(a2.num_blocks() == 12);
  CHECK(naive_valid(a2));
  CHECK(naive_valid(affine_sts(3)));
}

TEST_CASE("boolean SQS") {
  CHECK(boolean_sqs(2).num_blocks() == 1);
  CHECK(boolean_sqs(2).block(0) == Block{0, 1, 2, 3});
  CHECK(boolean_sqs(3).num_blocks() == 14);
  CHECK(boolean_sqs(5).num_blocks() == 1240);
  CHECK(naive_valid(boolean_sqs(4)));
}

TEST_CASE("circle one-factorization") {
  for (std::size_t m : {2u, 4u, 8u, 10u, 16u}) {
    const OneFactorization f = circle_one_factorization(m);
    CHECK(f.factors.size() == m - 1);
    std::set<std::pair<Point, Point>> edges;
    for (const auto& factor : f.factors) {
      CHECK(factor.size() == m / 2);
      std::set<Point> seen;
      for (auto [u, v] : factor) {
        CHECK(u < v);
        seen.insert(u);
        seen.insert(v);
        edges.insert({u, v});
      }
      CHECK(seen.size() == m);  // perfect matching
    }
    CHECK(edges.size() == m * (m - 1) / 2);
  }
  CHECK(error_of([] { circle_one_factorization(5); }) == ErrorCode::kOddOrder);
}

TEST_CASE("quadrupling SQS(8) gives SQS(32)") {
  const SystemWithSequencing q = sqs_quadruple(boolean_sqs(3));
  CHECK(q.system.n() == 32);
  CHECK(q.system.num_blocks() == 1240);
  CHECK(naive_valid(q.system));
  CHECK(q.sequencing == natural_sequencing(32));
}

TEST_CASE("quadrupling rejects bad bases") {
  CHECK(error_of([] { sqs_quadruple(hamming_sts(3)); }) ==
        ErrorCode::kInvalidBase);
  const SystemWithSequencing q4 = sqs_quadruple(boolean_sqs(2));
  CHECK(q4.system.n() == 16);
  CHECK(naive_valid(q4.system));
}

TEST_CASE("natural sequencing") {
  CHECK(natural_sequencing(3).order() == std::vector<Point>{0, 1, 2});
  CHECK(natural_sequencing(37).size() == 37);
  CHECK(natural_sequencing(37).at(36) == 36);
  CHECK(error_of([] { natural_sequencing(0); }) == ErrorCode::kEmptyUniverse);
}
