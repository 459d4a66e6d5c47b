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

#include <cmath>
#include <limits>
#include <random>

#include "blockseq/core/bounds.hpp"
#include "blockseq/core/constructions.hpp"
#include "blockseq/core/simplex.hpp"
#include "support/fixtures.hpp"

using namespace blockseq;
using blockseq::testing::error_of;

namespace {

// Blocks meeting the first ell points of the natural order in i points.
std::vector<std::uint64_t> intersection_counts(const BlockSystem& sys,
                                               std::size_t ell) {
  std::vector<std::uint64_t> b(static_cast<std::size_t>(sys.k()) + 1, 0);
  for (const Block& blk : sys.blocks()) {
    std::size_t in = 0;
    for (Point p : blk) in += p < ell;
    ++b[in];
  }
  return b;
}

unsigned __int128 choose128(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  unsigned __int128 c = 1;
  for (long long i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// Wide t-subsets by position: first u, last v with v - u > ell, and t - 2
// interior positions between them.
bool easy_oracle(int t, int k, std::uint64_t n, std::uint64_t ell) {
  unsigned __int128 wide = 0;
  for (long long u = 1; u <= static_cast<long long>(n); ++u) {
    for (long long v = u + static_cast<long long>(ell) + 1;
         v <= static_cast<long long>(n); ++v) {
      wide += choose128(v - u - 1, t - 2);
    }
  }
  return choose128(static_cast<long long>(n), t) <= choose128(k, t) * wide;
}

// Minimum of c.x over a 2-variable polygon by enumerating vertices.
double vertex_min(const LinearProgram& lp) {
  std::vector<std::array<double, 3>> lines;  // a x + b y = c
  for (const LinearConstraint& c : lp.constraints) {
    lines.push_back({c.coeffs[0], c.coeffs[1], c.rhs});
  }
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});
  auto feasible = [&](double x, double y) {
    if (x < -1e-9 || y < -1e-9) return false;
    for (const LinearConstraint& c : lp.constraints) {
      const double v = c.coeffs[0] * x + c.coeffs[1] * y;
      if (c.rel == Relation::kLe && v > c.rhs + 1e-9) return false;
      if (c.rel == Relation::kGe && v < c.rhs - 1e-9) return false;
      if (c.rel == Relation::kEq && std::abs(v - c.rhs) > 1e-9) return false;
    }
    return true;
  };
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& p = lines[i];
      const auto& q = lines[j];
      const double det = p[0] * q[1] - p[1] * q[0];
      if (std::abs(det) < 1e-12) continue;
      const double x = (p[2] * q[1] - p[1] * q[2]) / det;
      const double y = (p[0] * q[2] - p[2] * q[0]) / det;
      if (feasible(x, y)) {
        best = std::min(best, lp.objective[0] * x + lp.objective[1] * y);
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("Stinson-Veitch bound") {
  CHECK(sv_bound_sts(7) == 3);
  CHECK(sv_bound_sts(37) == 13);
  CHECK(sv_bound_sts(3) == 1);
}

TEST_CASE("easy bound") {
  CHECK(easy_bound_feasible(3, 4, 1, 20, 10));
  CHECK_FALSE(easy_bound_feasible(3, 4, 1, 20, 19));
  CHECK_FALSE(easy_bound_feasible(2, 3, 1, 9, 8));
  const std::uint64_t e = easy_bound_max_ell(3, 4, 1, 1000);
  CHECK(std::abs(static_cast<double>(e) - 674.0) <= 6.74);
  CHECK(error_of([] { easy_bound_feasible(3, 3, 1, 20, 5); }) ==
        ErrorCode::kBadParameters);
}

TEST_CASE("easy bound agrees with a position-pair double sum") {
  for (int t = 2; t <= 4; ++t) {
    for (int k = t + 1; k <= t + 2; ++k) {
      for (std::uint64_t n = static_cast<std::uint64_t>(k); n <= 40; n += 3) {
        for (std::uint64_t ell = 0; ell <= n; ++ell) {
          CHECK(easy_bound_feasible(t, k, 1, n, ell) == easy_oracle(t, k, n, ell));
        }
      }
    }
  }
}

TEST_CASE("bi_solve examples") {
  const BiVector a = bi_solve(2, 1, 7, 3);
  CHECK(a.b == std::vector<Rational>{1, 3, 3, 0});
  const BiVector b = bi_solve(2, 1, 9, 3);
  CHECK(b.b == std::vector<Rational>{3, 6, 3, 0});
  const BiVector c = bi_solve(3, 1, 16, 0);
  CHECK(c.b == std::vector<Rational>{140, 0, 0, 0, 0});
}

TEST_CASE("bi_solve matches block counts of real designs") {
  for (const BlockSystem& sys : {hamming_sts(3), hamming_sts(4), affine_sts(2),
                                 affine_sts(3), skolem_sts(6).system}) {
    for (std::size_t ell = 0; ell <= sys.n(); ++ell) {
      const std::vector<std::uint64_t> want = intersection_counts(sys, ell);
      if (want.back() != 0) continue;  // solved with no block inside X
      const BiVector v = bi_solve(2, 1, sys.n(), ell);
      for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(v.b[i] == Rational(want[i]));
      }
    }
  }
  for (const BlockSystem& sys : {boolean_sqs(3), boolean_sqs(4)}) {
    for (std::size_t ell = 0; ell <= sys.n(); ++ell) {
      const std::vector<std::uint64_t> want = intersection_counts(sys, ell);
      if (want.back() != 0) continue;  // solved with no block inside X
      const BiVector v = bi_solve(3, 1, sys.n(), ell);
      for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(v.b[i] == Rational(want[i]));
      }
    }
  }
}

TEST_CASE("bi_solve total identity on random draws") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int t = 1 + static_cast<int>(rng() % 5);
    const int lambda = 1 + static_cast<int>(rng() % 4);
    const std::uint64_t n = static_cast<std::uint64_t>(t + 1) + rng() % 80;
    const std::uint64_t ell = rng() % (n + 1);
    const BiVector v = bi_solve(t, lambda, n, ell);
    Rational sum = 0;
    for (const Rational& x : v.b) sum += x;
    CHECK(sum == Rational(lambda) * Rational(big_binomial(static_cast<long long>(n), t)) /
                     Rational(t + 1));
  }
}

TEST_CASE("generalized Stinson-Veitch") {
  CHECK(svgen_max_ell(2, 1, 37) == 13);
  CHECK(svgen_max_ell(2, 1, 7) == 3);
  const double m = static_cast<double>(svgen_max_ell(3, 1, 1000));
  CHECK(std::abs(m - 408.0) <= 4.08);
  CHECK(svgen_check(2, 1, 37, 2) == SvVerdict::kFeasible);
  CHECK(svgen_check(2, 1, 37, 14) != SvVerdict::kFeasible);
}

TEST_CASE("SQS alpha root") {
  const double a = sqs_alpha_root();
  CHECK(std::abs(a - 1.0 / std::sqrt(6.0)) <= 1e-9);
  CHECK(std::abs(((12 * a - 6) * a - 2) * a + 1) <= 1e-9);
}

TEST_CASE("simplex toy problems") {
  LinearProgram one;
  one.objective = {1};
  one.constraints = {{{1}, Relation::kGe, 1}};
  const LpSolution s1 = simplex_solve(one);
  CHECK(s1.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s1.x[0] == doctest::Approx(1.0).epsilon(1e-12));

  LinearProgram two;
  two.objective = {1, 1};
  two.constraints = {{{1, 1}, Relation::kGe, 2}, {{1, 0}, Relation::kLe, 0.5}};
  CHECK(simplex_solve(two).value == doctest::Approx(2.0).epsilon(1e-12));

  LinearProgram infeasible;
  infeasible.objective = {1};
  infeasible.constraints = {{{1}, Relation::kLe, -1}};
  CHECK(error_of([&] { simplex_solve(infeasible); }) == ErrorCode::kInfeasible);

  LinearProgram unbounded;
  unbounded.objective = {-1};
  unbounded.constraints = {{{1}, Relation::kGe, 1}};
  CHECK(error_of([&] { simplex_solve(unbounded); }) == ErrorCode::kUnbounded);
}

TEST_CASE("simplex agrees with vertex enumeration on random 2D programs") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> coef(-3, 3);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp;
    lp.objective = {coef(rng), coef(rng)};
    // A box keeps every program bounded.
    lp.constraints.push_back({{1, 0}, Relation::kLe, 5});
    lp.constraints.push_back({{0, 1}, Relation::kLe, 5});
    const int extra = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < extra; ++i) {
      const Relation rel = rng() % 2 ? Relation::kLe : Relation::kGe;
      lp.constraints.push_back({{coef(rng), coef(rng)}, rel, coef(rng)});
    }
    const double want = vertex_min(lp);
    if (std::isinf(want)) {
      CHECK(error_of([&] { simplex_solve(lp); }) == ErrorCode::kInfeasible);
      continue;
    }
    ++solved;
    const LpSolution got = simplex_solve(lp);
    CHECK(got.value == doctest::Approx(want).epsilon(1e-7));
    // Scaling a row leaves the optimum unchanged.
    LinearProgram scaled = lp;
    for (double& c : scaled.constraints.back().coeffs) c *= 7.5;
    scaled.constraints.back().rhs *= 7.5;
    CHECK(std::abs(simplex_solve(scaled).value - got.value) <= 1e-9);
  }
  CHECK(solved > 100);
}

TEST_CASE("cyclic LP and contradiction margin") {
  const double t = cyclic_lp_bound(0.1645, 0.013);
  CHECK(std::abs(t - 0.00225352) <= 1e-6);
  CHECK(cyclic_lp_bound() == t);
  const double t328 = cyclic_lp_bound(0.164, 0.016);
  CHECK(t328 < t);
  CHECK(contradiction_margin(0.329, t) > 0);
  CHECK(contradiction_margin(0.328, t328) < 0);
  CHECK(std::abs(contradiction_margin(1.0 / 3, 0)) <= 1e-12);
  const double degenerate = cyclic_lp_bound(1.0 / 6, 0);
  CHECK(std::isfinite(degenerate));
  CHECK(error_of([] { cyclic_lp(0.2, 0.1); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { contradiction_margin(0.6, 0); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("profile strings") {
  CHECK(profile_string(parse_profile("210000")) == "210000");
  CHECK(error_of([] { parse_profile("21000"); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { parse_profile("220000"); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { parse_profile("40000a"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("pair-counting identities hold at random shifts") {
  std::mt19937_64 rng(31);
  for (std::size_t m : {6u, 10u}) {
    const SystemWithSequencing s = skolem_sts(m);
    const std::size_t n = s.system.n();
    const std::size_t delta = (n - 1) / 6;
    for (int shift = 0; shift < 10; ++shift) {
      const ProfileCounts pc = segment_profile_counts(
          s.system, s.sequencing, rng() % n, delta, n - 6 * delta);
      CHECK(pc.total() == s.system.num_blocks());
      for (int i = 1; i <= 7; ++i) {
        for (int j = i; j <= 7; ++j) CHECK(pair_identity_residual(pc, i, j) == 0);
      }
    }
  }
}

TEST_CASE("profile count errors") {
  const SystemWithSequencing s = skolem_sts(6);
  CHECK(error_of([&] { segment_profile_counts(s.system, s.sequencing, 0, 5, 1); }) ==
        ErrorCode::kBadPartition);
  const ProfileCounts pc = segment_profile_counts(s.system, s.sequencing, 0, 6, 1);
  CHECK(error_of([&] { pair_identity_residual(pc, 3, 2); }) ==
        ErrorCode::kInvalidArgument);
}
