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

#ifndef BLOCKSEQ_CORE_BOUNDS_HPP_
#define BLOCKSEQ_CORE_BOUNDS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "blockseq/core/design.hpp"
#include "blockseq/core/goodness.hpp"
#include "blockseq/core/simplex.hpp"

namespace blockseq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

BigInt big_binomial(long long n, long long k);

// floor((n + 2) / 3): the classical bound for Steiner triple systems.
std::uint64_t sv_bound_sts(std::uint64_t n);

// Wide t-subset bound for an S_lambda(t,k,n).
bool easy_bound_feasible(int t, int k, int lambda, std::uint64_t n,
                         std::uint64_t ell);
std::uint64_t easy_bound_max_ell(int t, int k, int lambda, std::uint64_t n);

struct BiVector {
  int t = 0;
  int lambda = 0;
  std::uint64_t n = 0;
  std::uint64_t ell = 0;
  std::vector<Rational> b;  // b_0 .. b_{t+1}
};

// Block counts by intersection size with the first ell points of an
// S_lambda(t, t+1, n), solved downward from b_{t+1} = 0.
BiVector bi_solve(int t, int lambda, std::uint64_t n, std::uint64_t ell);

enum class SvVerdict { kFeasible, kInfeasible, kNegativeBi };

SvVerdict svgen_check(int t, int lambda, std::uint64_t n, std::uint64_t ell);
bool svgen_feasible(int t, int lambda, std::uint64_t n, std::uint64_t ell);
std::uint64_t svgen_max_ell(int t, int lambda, std::uint64_t n);

// Smallest positive root of 12x^3 - 6x^2 - 2x + 1.
double sqs_alpha_root();

// Normalized LP in a_111000, a_110100, a_110010, a_201000, a_200010,
// a_101010, a_200100 minimizing a_200100.
LinearProgram cyclic_lp(double delta_hat, double eps_hat);
double cyclic_lp_bound(double delta_hat = 0.1645, double eps_hat = 0.013);

// Leading-order slack of the closing counting inequality at ell = alpha n.
double contradiction_margin(double alpha, double t_hat);

// Intersection sizes with S_1..S_6; the S_7 share is 3 minus their sum.
using Profile = std::array<std::uint8_t, 6>;

Profile parse_profile(std::string_view digits);
std::string profile_string(const Profile& p);

struct ProfileCounts {
  std::size_t r = 0;
  std::size_t delta = 0;
  std::size_t eps = 0;
  std::map<Profile, std::uint64_t> counts;

  std::uint64_t get(std::string_view digits) const;
  std::uint64_t total() const;
};

ProfileCounts segment_profile_counts(const BlockSystem& sys,
                                     const Sequencing& seq, std::size_t r,
                                     std::size_t delta, std::size_t eps);

// Counts (x, y, B) with x in S_i, y in S_j, {x, y} in B (1 <= i <= j <= 7)
// from the profile counts, minus the number of such point pairs. Zero for
// every STS.
long long pair_identity_residual(const ProfileCounts& pc, int i, int j);

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_BOUNDS_HPP_
