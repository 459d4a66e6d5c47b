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

#ifndef BLOCKSEQ_CORE_GAME_HPP_
#define BLOCKSEQ_CORE_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "blockseq/core/design.hpp"

namespace blockseq {

enum class Player { kAlice, kBob };
enum class Outcome { kAliceLoses, kBobLoses, kDraw };

const char* outcome_name(Outcome o);

// Immutable game position. Hamming systems use labels id + 1, so that
// blocks are the triples {x, y, x ^ y}.
class GameState {
 public:
  const BlockSystem& system() const { return *sys_; }
  std::shared_ptr<const BlockSystem> system_ptr() const { return sys_; }
  std::size_t ell() const { return ell_; }
  const std::vector<Point>& moves() const { return moves_; }
  Player turn() const {
    return moves_.size() % 2 == 0 ? Player::kAlice : Player::kBob;
  }
  bool used(Point p) const { return used_[p] != 0; }
  std::optional<Point> bob_u() const { return bob_u_; }  // a label
  std::optional<Outcome> outcome() const { return outcome_; }
  bool hamming() const { return hamming_; }
  std::vector<Point> legal_moves() const;

 private:
  friend GameState new_game(std::shared_ptr<const BlockSystem>, std::size_t);
  friend GameState apply_move(const GameState&, Point);

  std::shared_ptr<const BlockSystem> sys_;
  std::size_t ell_ = 3;
  std::vector<Point> moves_;
  std::vector<char> used_;
  std::optional<Point> bob_u_;
  std::optional<Outcome> outcome_;
  bool hamming_ = false;
};

GameState new_game(std::shared_ptr<const BlockSystem> sys, std::size_t ell);
GameState apply_move(const GameState& state, Point p);

// Bob's pairing strategy on a Hamming system; returns a point id.
Point bob_reply(const GameState& state);

using Policy = std::function<Point(const GameState&)>;

Policy random_policy(std::uint64_t seed);
Policy bob_policy();
// Plays the given ids in turn; throws InvalidArgument when exhausted.
Policy fixed_script(std::vector<Point> ids);

struct PlayResult {
  Outcome outcome = Outcome::kDraw;
  std::vector<Point> moves;
};

PlayResult play(std::shared_ptr<const BlockSystem> sys, std::size_t ell,
                const Policy& alice, const Policy& bob);

struct ExhaustiveResult {
  bool bob_never_loses = true;
  std::uint64_t lines = 0;          // finished games
  std::uint64_t alice_losses = 0;
  std::uint64_t invariant_checks = 0;
};

// Every Alice line against bob_reply on hamming_sts(r), r <= 4.
ExhaustiveResult exhaustive_bob_never_loses(int r, std::size_t ell,
                                            unsigned threads = 1);

}  // namespace blockseq

#endif  // BLOCKSEQ_CORE_GAME_HPP_
