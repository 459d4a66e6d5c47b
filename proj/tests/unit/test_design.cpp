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
#include <random>

#include "blockseq/core/constructions.hpp"
#include "blockseq/core/design.hpp"
#include "blockseq/core/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace blockseq;
using blockseq::testing::naive_valid;

namespace {

std::vector<Block> xor_triples(int r) {
  std::vector<Block> out;
  const Point n = (1u << r) - 1;
  for (Point a = 1; a <= n; ++a) {
    for (Point b = a + 1; b <= n; ++b) {
      const Point c = a ^ b;
      if (c > b) out.push_back({a - 1, b - 1, c - 1});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("xor triples on seven points form a valid STS") {
  const BlockSystem fano =
      BlockSystem::build(DesignKind::kSTS, 7, 2, 3, 1, xor_triples(3));
  CHECK(fano.num_blocks() == 7);
  CHECK(validate_system(fano).valid());
  CHECK(naive_valid(fano));
}

TEST_CASE("repeated pair is rejected for PSTS") {
  CHECK(testing::error_of([] {
          BlockSystem::build(DesignKind::kPSTS, 5, 2, 3, 1,
                             {{0, 1, 2}, {0, 1, 3}});
        }) == ErrorCode::kInvalidDesign);
  const BlockSystem loose = BlockSystem::build(
      DesignKind::kPSTS, 5, 2, 3, 1, {{0, 1, 2}, {0, 1, 3}}, Validation::kSkip);
  const ValidationReport rep = validate_system(loose);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].subset == std::vector<Point>{0, 1});
  CHECK(rep.violations[0].found == 2);
  CHECK(rep.violations[0].at_most);
}

TEST_CASE("structural block errors") {
  CHECK(testing::error_of([] {
          BlockSystem::build(DesignKind::kPSTS, 5, 2, 3, 1, {{0, 1, 2}, {2, 1, 0}});
        }) == ErrorCode::kDuplicateBlock);
  CHECK(testing::error_of([] {
          BlockSystem::build(DesignKind::kPSTS, 5, 2, 3, 1, {{0, 0, 2}});
        }) == ErrorCode::kRepeatedPointInBlock);
  CHECK(testing::error_of([] {
          BlockSystem::build(DesignKind::kPSTS, 5, 2, 3, 1, {{0, 1, 5}});
        }) == ErrorCode::kPointOutOfRange);
  CHECK(testing::error_of([] {
          BlockSystem::build(DesignKind::kPSTS, 5, 2, 3, 1, {{0, 1}});
        }) == ErrorCode::kBadBlockSize);
  CHECK(testing::error_of([] {
          BlockSystem::build(DesignKind::kSTS, 7, 3, 4, 1, {});
        }) == ErrorCode::kBadParameters);
  CHECK(testing::error_of([] {
          BlockSystem::build(DesignKind::kPSTS, 0, 2, 3, 1, {});
        }) == ErrorCode::kEmptyUniverse);
}

TEST_CASE("SQS(8) from xor quadruples") {
  std::vector<Block> blocks;
  for (Point a = 0; a < 8; ++a)
    for (Point b = a + 1; b < 8; ++b)
      for (Point c = b + 1; c < 8; ++c) {
        const Point d = a ^ b ^ c;
        if (d > c) blocks.push_back({a, b, c, d});
      }
  const BlockSystem sqs = BlockSystem::build(DesignKind::kSQS, 8, 3, 4, 1, blocks);
  CHECK(sqs.num_blocks() == 14);
  CHECK(naive_valid(sqs));
  const std::vector<Point> key{0, 1, 2};
  CHECK(completions(sqs, key).size() == 1);
}

TEST_CASE("deleting a block leaves three uncovered pairs") {
  std::vector<Block> blocks = xor_triples(3);
  blocks.pop_back();
  const BlockSystem sys = BlockSystem::build(DesignKind::kSTS, 7, 2, 3, 1,
                                             blocks, Validation::kSkip);
  const ValidationReport rep = validate_system(sys);
  CHECK(rep.violations.size() == 3);
  for (const SubsetViolation& v : rep.violations) CHECK(v.found == 0);
}

TEST_CASE("completions") {
  const BlockSystem fano = hamming_sts(3);
  const std::vector<Point> pair{0, 1};
  const std::vector<Block> c = completions(fano, pair);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Block{0, 1, 2});  // labels 1, 2, 3
  const BlockSystem one = testing::psts(5, {{0, 1, 2}});
  const std::vector<Point> far{3, 4};
  CHECK(completions(one, far).empty());
  const std::vector<Point> big{0, 1, 2};
  CHECK(testing::error_of([&] { completions(one, big); }) == ErrorCode::kSubsetTooLarge);
}

TEST_CASE("directed completions respect order") {
  const BlockSystem dts = BlockSystem::build(DesignKind::kDTS, 3, 2, 3, 1,
                                             {{0, 1, 2}}, Validation::kSkip);
  const std::vector<Point> fwd{0, 1};
  const std::vector<Point> back{1, 0};
  CHECK(completions(dts, fwd).size() == 1);
  CHECK(completions(dts, back).empty());
  const BlockSystem mts = BlockSystem::build(DesignKind::kMTS, 3, 2, 3, 1,
                                             {{1, 2, 0}}, Validation::kSkip);
  CHECK(mts.block(0) == Block{0, 1, 2});  // rotated to the minimum
  const std::vector<Point> wrap{2, 0};
  const std::vector<Point> plain{0, 2};
  // Every ordered pair of a cyclic triple sits inside some rotation.
  CHECK(completions(mts, wrap).size() == 1);
  CHECK(completions(mts, plain).size() == 1);
}

TEST_CASE("shipped directed and BD fixtures validate") {
  for (const char* name : {"mts4.design", "dts4.design", "pg3.design"}) {
    const BlockSystem sys = testing::load_fixture(name);
    CHECK(validate_system(sys).valid());
    CHECK(naive_valid(sys));
  }
}

TEST_CASE("completion index matches a rebuild") {
  for (const BlockSystem& sys : {hamming_sts(4), boolean_sqs(3),
                                 testing::load_fixture("pg3.design")}) {
    CHECK(rebuild_completion_index(sys) == sys.completion_index());
  }
}

TEST_CASE("validation agrees with pair counting on random PSTS") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 12;
    std::vector<Block> blocks;
    for (int i = 0; i < 6; ++i) {
      Block b{static_cast<Point>(rng() % n), static_cast<Point>(rng() % n),
              static_cast<Point>(rng() % n)};
      std::sort(b.begin(), b.end());
      if (b[0] == b[1] || b[1] == b[2]) continue;
      if (std::find(blocks.begin(), blocks.end(), b) != blocks.end()) continue;
      blocks.push_back(b);
    }
    const BlockSystem sys = BlockSystem::build(DesignKind::kPSTS, n, 2, 3, 1,
                                               blocks, Validation::kSkip);
    CHECK(validate_system(sys).valid() == naive_valid(sys));
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK(testing::error_of([] { binomial(200, 100); }) == ErrorCode::kTooLarge);
}
