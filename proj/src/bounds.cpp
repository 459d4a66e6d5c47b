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

#include "blockseq/core/bounds.hpp"

#include <cmath>
#include <string>

#include "blockseq/core/error.hpp"

namespace blockseq {
namespace {

void check_design_params(int t, int k, int lambda, std::uint64_t n) {
  if (t < 2 || k <= t || lambda < 1 || static_cast<std::uint64_t>(k) > n) {
    throw Error(ErrorCode::kBadParameters,
                "need 2 <= t < k <= n and lambda >= 1");
  }
}

long long as_ll(std::uint64_t v) { return static_cast<long long>(v); }

}  // namespace

BigInt big_binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (long long i = 0; i < k; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return c;
}

std::uint64_t sv_bound_sts(std::uint64_t n) { return (n + 2) / 3; }

bool easy_bound_feasible(int t, int k, int lambda, std::uint64_t n,
                         std::uint64_t ell) {
  check_design_params(t, k, lambda, n);
  if (ell > n) throw Error(ErrorCode::kBadParameters, "ell exceeds n");
  // Inner sum over v in closed form: C(n-u, t-1) - C(ell, t-1).
  BigInt wide = 0;
  const BigInt tail = big_binomial(as_ll(ell), t - 1);
  for (long long u = 1; u + as_ll(ell) + 1 <= as_ll(n); ++u) {
    wide += big_binomial(as_ll(n) - u, t - 1) - tail;
  }
  return big_binomial(as_ll(n), t) <= big_binomial(k, t) * wide;
}

std::uint64_t easy_bound_max_ell(int t, int k, int lambda, std::uint64_t n) {
  check_design_params(t, k, lambda, n);
  for (std::uint64_t ell = 0; ell <= n; ++ell) {
    if (!easy_bound_feasible(t, k, lambda, n, ell)) return ell == 0 ? 0 : ell - 1;
  }
  return n;
}

BiVector bi_solve(int t, int lambda, std::uint64_t n, std::uint64_t ell) {
  if (t < 1 || lambda < 1 || ell > n) {
    throw Error(ErrorCode::kBadParameters,
                "need t >= 1, lambda >= 1 and ell <= n");
  }
  BiVector v;
  v.t = t;
  v.lambda = lambda;
  v.n = n;
  v.ell = ell;
  v.b.assign(static_cast<std::size_t>(t) + 2, Rational(0));
  for (int i = t; i >= 0; --i) {
    const Rational lhs = Rational(lambda) *
                         Rational(big_binomial(as_ll(ell), i)) *
                         Rational(big_binomial(as_ll(n - ell), t - i));
    v.b[static_cast<std::size_t>(i)] =
        (lhs - Rational(i + 1) * v.b[static_cast<std::size_t>(i) + 1]) /
        Rational(t + 1 - i);
  }
  return v;
}

SvVerdict svgen_check(int t, int lambda, std::uint64_t n, std::uint64_t ell) {
  check_design_params(t, t + 1, lambda, n);
  if (ell > n) throw Error(ErrorCode::kBadParameters, "ell exceeds n");
  if (ell < static_cast<std::uint64_t>(t) + 1) return SvVerdict::kFeasible;
  const BiVector v = bi_solve(t, lambda, n, ell);
  for (const Rational& b : v.b) {
    if (b < 0) return SvVerdict::kNegativeBi;
  }
  // Inner sum over v in closed form: C(n-u, t-1) - C(ell-1, t-1).
  BigInt sum = 0;
  const BigInt tail = big_binomial(as_ll(ell) - 1, t - 1);
  for (long long u = as_ll(ell) + 1; u <= as_ll(n) - as_ll(ell); ++u) {
    sum += big_binomial(as_ll(n) - u, t - 1) - tail;
  }
  const Rational rhs = Rational(BigInt(lambda) * sum) / Rational(t - 1);
  return v.b[0] <= rhs ? SvVerdict::kFeasible : SvVerdict::kInfeasible;
}

bool svgen_feasible(int t, int lambda, std::uint64_t n, std::uint64_t ell) {
  return svgen_check(t, lambda, n, ell) == SvVerdict::kFeasible;
}

std::uint64_t svgen_max_ell(int t, int lambda, std::uint64_t n) {
  check_design_params(t, t + 1, lambda, n);
  for (std::uint64_t ell = 0; ell <= n; ++ell) {
    if (!svgen_feasible(t, lambda, n, ell)) return ell == 0 ? 0 : ell - 1;
  }
  return n;
}

double sqs_alpha_root() {
  auto f = [](double x) { return ((12 * x - 6) * x - 2) * x + 1; };
  double lo = 0.0, hi = 0.45;  // f(lo) > 0 > f(hi); next root is 1/2
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

LinearProgram cyclic_lp(double delta_hat, double eps_hat) {
  if (!(delta_hat > 0) || eps_hat < 0 ||
      std::abs(6 * delta_hat + eps_hat - 1) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "need delta > 0, eps >= 0 and 6 delta + eps = 1");
  }
  const double d2 = delta_hat * delta_hat;
  const double de = delta_hat * eps_hat;
  LinearProgram lp;
  lp.names = {"a111000", "a110100", "a110010", "a201000",
              "a200010", "a101010", "a200100"};
  lp.objective = {0, 0, 0, 0, 0, 0, 1};
  auto band = [&](std::vector<double> row, double lo, double hi) {
    lp.constraints.push_back({row, Relation::kGe, lo});
    lp.constraints.push_back({std::move(row), Relation::kLe, hi});
  };
  band({2, 1, 1, 0, 0, 0, 0}, d2 - de, d2);
  band({1, 1, 1, 2, 2, 1, 0}, d2 - 5 * de, d2 + 4 * de);
  band({0, 2, 2, 0, 0, 0, 4}, d2 - 7 * de, d2 + 6 * de);
  band({0, 0, 0, 1, 1, 0, 1}, d2 / 2 - eps_hat * eps_hat / 2, d2 / 2);
  return lp;
}

double cyclic_lp_bound(double delta_hat, double eps_hat) {
  return simplex_solve(cyclic_lp(delta_hat, eps_hat)).value;
}

double contradiction_margin(double alpha, double t_hat) {
  if (!(alpha > 0 && alpha < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1/2)");
  }
  const double lhs = 1.0 / 6 - alpha / 2 + alpha * alpha / 2 + t_hat;
  const double rhs = (1 - 2 * alpha) * (1 - 2 * alpha) / 2;
  return lhs - rhs;
}

Profile parse_profile(std::string_view digits) {
  Profile p{};
  if (digits.size() != 6) {
    throw Error(ErrorCode::kInvalidArgument, "profile needs six digits");
  }
  int sum = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    if (digits[i] < '0' || digits[i] > '3') {
      throw Error(ErrorCode::kInvalidArgument, "profile digit out of range");
    }
    p[i] = static_cast<std::uint8_t>(digits[i] - '0');
    sum += p[i];
  }
  if (sum > 3) throw Error(ErrorCode::kInvalidArgument, "profile sum above 3");
  return p;
}

std::string profile_string(const Profile& p) {
  std::string s;
  for (std::uint8_t v : p) s.push_back(static_cast<char>('0' + v));
  return s;
}

std::uint64_t ProfileCounts::get(std::string_view digits) const {
  auto it = counts.find(parse_profile(digits));
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t ProfileCounts::total() const {
  std::uint64_t s = 0;
  for (const auto& [p, c] : counts) s += c;
  return s;
}

ProfileCounts segment_profile_counts(const BlockSystem& sys,
                                     const Sequencing& seq, std::size_t r,
                                     std::size_t delta, std::size_t eps) {
  const std::size_t n = sys.n();
  if (delta == 0 || 6 * delta + eps != n || seq.size() != n) {
    throw Error(ErrorCode::kBadPartition,
                "segments must satisfy 6 delta + eps = n");
  }
  if (sys.k() != 3 || sys.directed()) {
    throw Error(ErrorCode::kInvalidArgument,
                "profile counts need an undirected triple system");
  }
  ProfileCounts pc;
  pc.r = r % n;
  pc.delta = delta;
  pc.eps = eps;
  for (const Block& b : sys.blocks()) {
    Profile p{};
    for (Point x : b) {
      const std::size_t off = (seq.position(x) + n - pc.r) % n;
      const std::size_t seg = off / delta;
      if (seg < 6) ++p[seg];
    }
    ++pc.counts[p];
  }
  return pc;
}

long long pair_identity_residual(const ProfileCounts& pc, int i, int j) {
  if (i < 1 || j < i || j > 7) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= i <= j <= 7");
  }
  auto size = [&](int s) {
    return static_cast<long long>(s == 7 ? pc.eps : pc.delta);
  };
  const long long lhs =
      i == j ? size(i) * (size(i) - 1) / 2 : size(i) * size(j);
  long long rhs = 0;
  for (const auto& [p, count] : pc.counts) {
    int k[8] = {0};
    int sum = 0;
    for (int s = 0; s < 6; ++s) {
      k[s + 1] = p[static_cast<std::size_t>(s)];
      sum += k[s + 1];
    }
    k[7] = 3 - sum;
    const long long w = i == j ? k[i] * (k[i] - 1) / 2 : k[i] * k[j];
    rhs += w * static_cast<long long>(count);
  }
  return rhs - lhs;
}

}  // namespace blockseq
