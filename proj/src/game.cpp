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

#include "blockseq/core/game.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <span>
#include <thread>

#include "blockseq/core/constructions.hpp"
#include "blockseq/core/error.hpp"
#include "blockseq/core/goodness.hpp"

namespace blockseq {
namespace {

Point label(Point id) { return id + 1; }

bool detect_hamming(const BlockSystem& sys) {
  const std::size_t n = sys.n();
  if (sys.kind() != DesignKind::kSTS || n < 3 || ((n + 1) & n) != 0) {
    return false;
  }
  return std::all_of(sys.blocks().begin(), sys.blocks().end(),
                     [](const Block& b) {
                       return (label(b[0]) ^ label(b[1]) ^ label(b[2])) == 0;
                     });
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kAliceLoses: return "AliceLoses";
    case Outcome::kBobLoses: return "BobLoses";
    case Outcome::kDraw: return "Draw";
  }
  return "?";
}

std::vector<Point> GameState::legal_moves() const {
  std::vector<Point> out;
  if (outcome_) return out;
  for (Point p = 0; p < used_.size(); ++p) {
    if (!used_[p]) out.push_back(p);
  }
  return out;
}

GameState new_game(std::shared_ptr<const BlockSystem> sys, std::size_t ell) {
  if (!sys) throw Error(ErrorCode::kInvalidArgument, "null system");
  if (ell < 3) throw Error(ErrorCode::kEllTooSmall, "the game needs ell >= 3");
  GameState s;
  s.used_.assign(sys->n(), 0);
  s.hamming_ = detect_hamming(*sys);
  s.sys_ = std::move(sys);
  s.ell_ = ell;
  return s;
}

GameState apply_move(const GameState& state, Point p) {
  if (state.outcome_) throw Error(ErrorCode::kGameOver, "game is over");
  if (p >= state.used_.size()) {
    throw Error(ErrorCode::kPointOutOfRange, "no such point");
  }
  if (state.used_[p]) throw Error(ErrorCode::kPointUsed, "point already used");
  GameState next = state;
  const Player mover = state.turn();
  const std::size_t len = state.moves_.size();
  const std::size_t w = std::min(len, state.ell_ - 1);
  std::span<const Point> window(state.moves_.data() + (len - w), w);
  const bool good = extends_good(*state.sys_, window, p);
  if (mover == Player::kBob && state.hamming_ && !state.bob_u_) {
    next.bob_u_ = label(state.moves_.back()) ^ label(p);
  }
  next.moves_.push_back(p);
  next.used_[p] = 1;
  if (!good) {
    next.outcome_ =
        mover == Player::kAlice ? Outcome::kAliceLoses : Outcome::kBobLoses;
  } else if (next.moves_.size() == next.used_.size()) {
    next.outcome_ = Outcome::kDraw;
  }
  return next;
}

Point bob_reply(const GameState& state) {
  if (!state.hamming()) {
    throw Error(ErrorCode::kNotHammingSystem,
                "the pairing strategy needs a Hamming system");
  }
  if (state.moves().empty() || state.turn() != Player::kBob) {
    throw Error(ErrorCode::kInvalidArgument, "Bob is not to move");
  }
  const Point v = label(state.moves().back());
  if (state.bob_u() && v == *state.bob_u()) {
    throw Error(ErrorCode::kStrategyInvariant, "Alice played Bob's u");
  }
  if (state.outcome()) throw Error(ErrorCode::kGameOver, "game is over");
  const Point u = state.bob_u() ? *state.bob_u() : (v == 1 ? 2 : 1);
  const Point reply = (v ^ u) - 1;
  if (reply >= state.system().n() || state.used(reply)) {
    throw Error(ErrorCode::kStrategyInvariant, "paired point already used");
  }
  return reply;
}

Policy random_policy(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const GameState& s) {
    const std::vector<Point> legal = s.legal_moves();
    if (legal.empty()) throw Error(ErrorCode::kGameOver, "no legal move");
    std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
    return legal[pick(*rng)];
  };
}

Policy bob_policy() { return [](const GameState& s) { return bob_reply(s); }; }

Policy fixed_script(std::vector<Point> ids) {
  auto script = std::make_shared<std::vector<Point>>(std::move(ids));
  auto next = std::make_shared<std::size_t>(0);
  return [script, next](const GameState&) {
    if (*next >= script->size()) {
      throw Error(ErrorCode::kInvalidArgument, "script exhausted");
    }
    return (*script)[(*next)++];
  };
}

PlayResult play(std::shared_ptr<const BlockSystem> sys, std::size_t ell,
                const Policy& alice, const Policy& bob) {
  GameState s = new_game(std::move(sys), ell);
  while (!s.outcome()) {
    const Policy& mover = s.turn() == Player::kAlice ? alice : bob;
    s = apply_move(s, mover(s));
  }
  return {*s.outcome(), s.moves()};
}

namespace {

struct Tally {
  bool bob_never_loses = true;
  std::uint64_t lines = 0;
  std::uint64_t alice_losses = 0;
  std::uint64_t invariant_checks = 0;

  void finish(Outcome o) {
    ++lines;
    if (o == Outcome::kAliceLoses) ++alice_losses;
    else bob_never_loses = false;
  }
};

void check_pairing(const GameState& s, Tally& t) {
  ++t.invariant_checks;
  const Point u = *s.bob_u();
  for (Point id = 0; id < s.system().n(); ++id) {
    if (!s.used(id)) continue;
    const Point mate = (label(id) ^ u) - 1;
    if (mate >= s.system().n() || !s.used(mate)) {
      throw Error(ErrorCode::kStrategyInvariant,
                  "used points are not a union of pairs");
    }
  }
}

void explore(const GameState& s, Tally& t);

// Alice plays `p` at `s`, Bob answers, and the search continues.
void alice_move(const GameState& s, Point p, Tally& t) {
  const GameState a = apply_move(s, p);
  if (a.outcome()) {
    t.finish(*a.outcome());
    return;
  }
  const GameState b = apply_move(a, bob_reply(a));
  ++t.invariant_checks;  // reply was legal
  if (b.outcome()) {
    t.finish(*b.outcome());
    return;
  }
  check_pairing(b, t);
  explore(b, t);
}

void explore(const GameState& s, Tally& t) {
  for (Point p = 0; p < s.system().n(); ++p) {
    if (!s.used(p)) alice_move(s, p, t);
  }
}

}  // namespace

ExhaustiveResult exhaustive_bob_never_loses(int r, std::size_t ell,
                                            unsigned threads) {
  if (r > 4) throw Error(ErrorCode::kTooLarge, "exhaustive search needs r <= 4");
  auto sys = std::make_shared<const BlockSystem>(hamming_sts(r));
  const GameState root = new_game(sys, ell);
  const std::size_t n = sys->n();
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  Tally total;
  std::exception_ptr failure;
  auto worker = [&] {
    Tally local;
    try {
      for (std::size_t p = next++; p < n; p = next++) {
        alice_move(root, static_cast<Point>(p), local);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
    std::lock_guard<std::mutex> lock(mu);
    total.bob_never_loses = total.bob_never_loses && local.bob_never_loses;
    total.lines += local.lines;
    total.alice_losses += local.alice_losses;
    total.invariant_checks += local.invariant_checks;
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, n));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return {total.bob_never_loses, total.lines, total.alice_losses,
          total.invariant_checks};
}

}  // namespace blockseq
