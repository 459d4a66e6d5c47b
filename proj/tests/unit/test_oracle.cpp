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
#include <numeric>

#include "blockseq/core/bounds.hpp"
#include "blockseq/core/constructions.hpp"
#include "blockseq/core/oracle.hpp"
#include "blockseq/core/sequenceable.hpp"
#include "blockseq/core/sequencer.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace blockseq;
using blockseq::testing::error_of;
using blockseq::testing::naive_is_good;

namespace {

// Best ell over all n! orders, for tiny systems.
std::size_t permutation_max_ell(const BlockSystem& sys, bool cyclic) {
  std::vector<Point> order(sys.n());
  std::iota(order.begin(), order.end(), Point{0});
  std::size_t best = 0;
  do {
    best = std::max(best, testing::naive_max_good_ell(sys, order, cyclic));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool permutation_sequenceable(const BlockSystem& sys) {
  std::vector<Point> order(sys.n());
  std::iota(order.begin(), order.end(), Point{0});
  do {
    if (!testing::naive_has_bad_segment(sys, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

TEST_CASE("backtracking witnesses") {
  const BlockSystem fano = hamming_sts(3);
  const auto w3 = backtrack_sequencing(fano, 3, false);
  REQUIRE(w3.has_value());
  CHECK(naive_is_good(fano, w3->order(), 3, false));
  CHECK_FALSE(backtrack_sequencing(fano, 4, false).has_value());

  const BlockSystem one = testing::psts(3, {{0, 1, 2}});
  CHECK_FALSE(backtrack_sequencing(one, 3, false).has_value());
  CHECK(backtrack_sequencing(one, 2, false).has_value());
  CHECK(error_of([] { backtrack_sequencing(hamming_sts(5), 3, false); }) ==
        ErrorCode::kTooLarge);
}

TEST_CASE("oracle maximum ell") {
  CHECK(oracle_max_ell(hamming_sts(3), false) == 3);
  CHECK(oracle_max_ell(affine_sts(2), false) == 3);
  const BlockSystem empty = BlockSystem::build(DesignKind::kPSTS, 5, 2, 3, 1, {});
  CHECK(oracle_max_ell(empty, false) == 5);
  CHECK(oracle_max_ell(empty, true) == 4);
  CHECK(oracle_max_ell(hamming_sts(3), false, 4) == 3);
}

TEST_CASE("oracle maximum ell matches permutation search on tiny systems") {
  const std::vector<BlockSystem> systems{
      hamming_sts(3), testing::load_fixture("mts4.design"),
      testing::load_fixture("dts4.design"),
      testing::load_fixture("psts_small.design")};
  for (const BlockSystem& sys : systems) {
    for (bool cyclic : {false, true}) {
      CHECK(oracle_max_ell(sys, cyclic) == permutation_max_ell(sys, cyclic));
    }
  }
  for (const BlockSystem& sys : testing::enumerate_psts(7, 3)) {
    CHECK(oracle_max_ell(sys, false) == permutation_max_ell(sys, false));
  }
}

TEST_CASE("oracle bounds") {
  for (const BlockSystem& sys : {hamming_sts(3), affine_sts(2)}) {
    const std::size_t m = oracle_max_ell(sys, false);
    CHECK(m >= static_cast<std::size_t>(sys.k() - 1));
    CHECK(m <= sv_bound_sts(sys.n()));
  }
}

TEST_CASE("staged success implies an oracle witness") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const BlockSystem sys = testing::random_psts(12 + rng() % 4, 12, rng);
    for (std::size_t ell = 3; ell <= 4; ++ell) {
      bool staged_ok = true;
      try {
        staged_greedy(sys, ell);
      } catch (const Error&) {
        staged_ok = false;
      }
      if (staged_ok) CHECK(backtrack_sequencing(sys, ell, false).has_value());
    }
  }
}

TEST_CASE("brute sequenceability") {
  CHECK(brute_sequenceable(testing::psts(4, {{0, 1, 2}})));
  CHECK_FALSE(brute_sequenceable(testing::psts(3, {{0, 1, 2}})));
  CHECK(brute_sequenceable(hamming_sts(3)) == permutation_sequenceable(hamming_sts(3)));
  CHECK(error_of([] { brute_sequenceable(affine_sts(2), 8); }) ==
        ErrorCode::kTooLarge);
}

TEST_CASE("brute sequenceability matches permutation scan for n <= 7") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const BlockSystem& sys : testing::enumerate_psts(n, 3)) {
      CHECK(brute_sequenceable(sys) == permutation_sequenceable(sys));
    }
  }
}
