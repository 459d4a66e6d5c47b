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

#ifndef BLOCKSEQ_CORE_SEQUENCER_HPP_
#define BLOCKSEQ_CORE_SEQUENCER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "blockseq/core/design.hpp"
#include "blockseq/core/goodness.hpp"

namespace blockseq {

// Extension-counting constants of a forbidden family at window length ell:
// suffix L, prefix Lp, insertion K, reachability (J, s), completion (Kp, sp).
struct PropertyConstants {
  std::uint64_t L = 0;
  std::uint64_t Lp = 0;
  std::uint64_t K = 0;
  std::uint64_t J = 0;
  std::uint64_t s = 0;
  std::uint64_t Kp = 0;
  std::uint64_t sp = 0;
  bool symmetric = true;
};

PropertyConstants constants_for(DesignKind kind, std::size_t ell, int t = 2,
                                int k = 3, int lambda = 1);
PropertyConstants constants_for(const BlockSystem& sys, std::size_t ell);

std::uint64_t threshold_psts(std::size_t ell);
std::uint64_t threshold_general(const PropertyConstants& c, std::size_t ell);
std::uint64_t threshold_cyclic(const PropertyConstants& c, std::size_t ell);

struct TieRule {
  enum class Mode { kMin, kRandom };
  Mode mode = Mode::kMin;
  std::uint64_t seed = 0;

  static TieRule min() { return {}; }
  static TieRule random(std::uint64_t seed) { return {Mode::kRandom, seed}; }
};

// Appends the first eligible point until stuck. With `cyclic_check` the
// result must also be cyclically good.
std::optional<Sequencing> naive_greedy(const BlockSystem& sys, std::size_t ell,
                                       bool cyclic_check = false,
                                       TieRule tie = {});

struct StagedOptions {
  TieRule tie;
  // Refuse to run below the proven threshold.
  bool strict = false;
};

struct StagedState {
  // Non-cyclic: x^1..x^L. Cyclic: x^0..x^M with M = Kp - sp.
  std::vector<std::vector<Point>> segments;
  std::vector<Point> v_prime;      // unused after Stage 1
  std::vector<Point> unfortunate;  // U
  std::vector<Point> tail;         // z
  std::vector<Point> gaps;         // y_1, y_2, ...
  std::vector<Point> bridge;       // cyclic closing sequence
};

struct StagedResult {
  Sequencing sequencing;
  StagedState state;
};

StagedResult staged_greedy_traced(const BlockSystem& sys, std::size_t ell,
                                  const StagedOptions& options = {});
Sequencing staged_greedy(const BlockSystem& sys, std::size_t ell,
                         const StagedOptions& options = {});

StagedResult cyclic_staged_greedy_traced(const BlockSystem& sys,
                                         std::size_t ell,
                                         const StagedOptions& options = {});
Sequencing cyclic_staged_greedy(const BlockSystem& sys, std::size_t ell,
                                const StagedOptions& options = {});

// Points outside the segments whose insertion into some gap breaks
// ell-goodness. Gaps sit between consecutive segments and, when
// `leading_gap` is set, before the first one.
std::vector<Point> unfortunate_set(
    const BlockSystem& sys, std::size_t ell,
    const std::vector<std::vector<Point>>& segments, bool leading_gap = true);

// Chooses w_1..w_{ell-1} from `pool` so that prefix_window w_1..w_{ell-1} u
// is ell-good. Throws ReachabilityFailed when the pool runs dry.
std::vector<Point> reachability_extend(const BlockSystem& sys, std::size_t ell,
                                       std::span<const Point> prefix_window,
                                       std::span<const Point> pool, Point u,
                                       TieRule tie = {});

// Chooses y of length ell-1 from `available` so that x_end y x_start is
// ell-good. Throws CompletionFailed when no choice exists.
std::vector<Point> completion_bridge(const BlockSystem& sys, std::size_t ell,
                                     std::span<const Point> x_end,
                                     std::span<const Point> x_start,
                                     std::span<const Point> available,
                                     TieRule tie = {});

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_SEQUENCER_HPP_
