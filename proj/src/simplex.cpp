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

#include "blockseq/core/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "blockseq/core/error.hpp"

namespace blockseq {
namespace {

struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<double>> a;  // rows x cols
  std::vector<double> b;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    const double p = a[r][c];
    for (double& v : a[r]) v /= p;
    b[r] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const double f = a[i][c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    basis[r] = c;
  }

  double objective(const std::vector<double>& cost) const {
    double z = 0.0;
    for (std::size_t i = 0; i < rows; ++i) z += cost[basis[i]] * b[i];
    return z;
  }
};

// Minimizes cost over the current basis; columns with allowed[j] == false
// never enter.
void optimize(Tableau& t, const std::vector<double>& cost,
              const std::vector<bool>& allowed) {
  const std::size_t max_iter = 50'000;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::size_t enter = t.cols;
    for (std::size_t j = 0; j < t.cols && enter == t.cols; ++j) {
      if (!allowed[j]) continue;
      double r = cost[j];
      for (std::size_t i = 0; i < t.rows; ++i) r -= cost[t.basis[i]] * t.a[i][j];
      if (r < -kSimplexTolerance) enter = j;
    }
    if (enter == t.cols) return;
    std::size_t leave = t.rows;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.rows; ++i) {
      if (t.a[i][enter] <= kSimplexTolerance) continue;
      const double ratio = t.b[i] / t.a[i][enter];
      if (ratio < best - kSimplexTolerance ||
          (std::abs(ratio - best) <= kSimplexTolerance && leave < t.rows &&
           t.basis[i] < t.basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == t.rows) throw Error(ErrorCode::kUnbounded, "LP is unbounded");
    t.pivot(leave, enter);
  }
  throw Error(ErrorCode::kInternal, "simplex iteration limit reached");
}

}  // namespace

LpSolution simplex_solve(const LinearProgram& lp) {
  const std::size_t nv = lp.objective.size();
  for (const LinearConstraint& c : lp.constraints) {
    if (c.coeffs.size() != nv) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint width differs from objective width");
    }
  }
  if (!lp.names.empty() && lp.names.size() != nv) {
    throw Error(ErrorCode::kInvalidArgument, "variable name count mismatch");
  }

  const std::size_t m = lp.constraints.size();
  std::size_t n_slack = 0, n_art = 0;
  std::vector<Relation> rel(m);
  std::vector<double> sign(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = lp.constraints[i].rel;
    if (lp.constraints[i].rhs < 0) {
      sign[i] = -1.0;
      if (rel[i] == Relation::kLe) rel[i] = Relation::kGe;
      else if (rel[i] == Relation::kGe) rel[i] = Relation::kLe;
    }
    if (rel[i] != Relation::kEq) ++n_slack;
    if (rel[i] != Relation::kLe) ++n_art;
  }

  Tableau t;
  t.rows = m;
  t.cols = nv + n_slack + n_art;
  t.a.assign(m, std::vector<double>(t.cols, 0.0));
  t.b.assign(m, 0.0);
  t.basis.assign(m, 0);
  const std::size_t art0 = nv + n_slack;
  std::size_t next_slack = nv, next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const LinearConstraint& c = lp.constraints[i];
    for (std::size_t j = 0; j < nv; ++j) t.a[i][j] = sign[i] * c.coeffs[j];
    t.b[i] = sign[i] * c.rhs;
    if (rel[i] == Relation::kLe) {
      t.a[i][next_slack] = 1.0;
      t.basis[i] = next_slack++;
    } else {
      if (rel[i] == Relation::kGe) t.a[i][next_slack++] = -1.0;
      t.a[i][next_art] = 1.0;
      t.basis[i] = next_art++;
    }
  }

  std::vector<bool> allowed(t.cols, true);
  if (n_art > 0) {
    std::vector<double> phase1(t.cols, 0.0);
    for (std::size_t j = art0; j < t.cols; ++j) phase1[j] = 1.0;
    optimize(t, phase1, allowed);
    double scale = 1.0;
    for (double v : t.b) scale = std::max(scale, std::abs(v));
    if (t.objective(phase1) > kSimplexTolerance * scale) {
      throw Error(ErrorCode::kInfeasible, "LP is infeasible");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < art0) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (std::abs(t.a[i][j]) > kSimplexTolerance) {
          t.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = art0; j < t.cols; ++j) allowed[j] = false;
  }

  std::vector<double> cost(t.cols, 0.0);
  for (std::size_t j = 0; j < nv; ++j) cost[j] = lp.objective[j];
  optimize(t, cost, allowed);

  LpSolution sol;
  sol.x.assign(nv, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < nv) sol.x[t.basis[i]] = std::max(0.0, t.b[i]);
  }
  sol.value = 0.0;
  for (std::size_t j = 0; j < nv; ++j) sol.value += lp.objective[j] * sol.x[j];
  return sol;
}

}  // namespace blockseq
