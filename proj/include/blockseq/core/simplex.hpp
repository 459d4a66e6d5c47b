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

#ifndef BLOCKSEQ_CORE_SIMPLEX_HPP_
#define BLOCKSEQ_CORE_SIMPLEX_HPP_

#include <string>
#include <vector>

namespace blockseq {

enum class Relation { kLe, kGe, kEq };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation rel = Relation::kLe;
  double rhs = 0.0;
};

// Minimize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  std::vector<std::string> names;
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
};

struct LpSolution {
  double value = 0.0;
  std::vector<double> x;
};

inline constexpr double kSimplexTolerance = 1e-9;

// Two-phase dense tableau simplex with Bland's rule. Throws Infeasible or
// Unbounded.
LpSolution simplex_solve(const LinearProgram& lp);

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_SIMPLEX_HPP_
