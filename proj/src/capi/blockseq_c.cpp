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

#include "blockseq/blockseq.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "blockseq/core/bounds.hpp"
#include "blockseq/core/constructions.hpp"
#include "blockseq/core/design.hpp"
#include "blockseq/core/design_io.hpp"
#include "blockseq/core/error.hpp"
#include "blockseq/core/game.hpp"
#include "blockseq/core/goodness.hpp"
#include "blockseq/core/oracle.hpp"
#include "blockseq/core/sequenceable.hpp"
#include "blockseq/core/sequencer.hpp"

struct bs_system {
  std::shared_ptr<const blockseq::BlockSystem> sys;
};

struct bs_seq {
  blockseq::Sequencing seq;
};

struct bs_game {
  blockseq::GameState state;
};

namespace {

using blockseq::ErrorCode;

static_assert(static_cast<int>(BS_E_INTERNAL) ==
              static_cast<int>(ErrorCode::kInternal) + 1);
static_assert(static_cast<int>(BS_KIND_BD) ==
              static_cast<int>(blockseq::DesignKind::kBD));

struct LastError {
  std::string message;
  int stage = 0;
  std::size_t line = 0;
};

thread_local LastError last_error;

bs_status fail(bs_status status, std::string message) {
  last_error.message = std::move(message);
  return status;
}

template <typename F>
bs_status guard(F&& f) {
  last_error = LastError{};
  try {
    f();
    return BS_OK;
  } catch (const blockseq::ParseError& e) {
    last_error.line = e.line();
    return fail(BS_E_PARSE, e.what());
  } catch (const blockseq::StageFailed& e) {
    last_error.stage = e.stage();
    return fail(BS_E_STAGE_FAILED, e.what());
  } catch (const blockseq::Error& e) {
    return fail(static_cast<bs_status>(static_cast<int>(e.code()) + 1),
                e.what());
  } catch (const std::bad_alloc&) {
    return fail(BS_E_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BS_E_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw blockseq::Error(ErrorCode::kInvalidArgument,
                          std::string(what) + " is null");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bs_system* wrap(blockseq::BlockSystem sys) {
  return new bs_system{
      std::make_shared<const blockseq::BlockSystem>(std::move(sys))};
}

bs_seq* wrap(blockseq::Sequencing seq) { return new bs_seq{std::move(seq)}; }

blockseq::DesignKind to_kind(bs_kind kind) {
  if (kind < BS_KIND_PSTS || kind > BS_KIND_BD) {
    throw blockseq::Error(ErrorCode::kInvalidArgument, "unknown kind");
  }
  return static_cast<blockseq::DesignKind>(kind);
}

blockseq::Validation to_validation(int validate) {
  return validate ? blockseq::Validation::kStrict : blockseq::Validation::kSkip;
}

blockseq::PropertyConstants constants(bs_kind kind, std::size_t ell, int t,
                                      int k, int lambda) {
  return blockseq::constants_for(to_kind(kind), ell, t, k, lambda);
}

void put_outcome(const blockseq::GameState& s, int* outcome) {
  if (outcome == nullptr) return;
  *outcome = s.outcome() ? static_cast<int>(*s.outcome()) : -1;
}

}  // namespace

extern "C" {

const char* bs_status_name(bs_status status) {
  switch (status) {
    case BS_OK: return "Ok";
    case BS_E_OUT_OF_MEMORY: return "OutOfMemory";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(ErrorCode::kInternal)) {
    return "Unknown";
  }
  return blockseq::error_code_name(static_cast<ErrorCode>(code)).data();
}

const char* bs_last_error(void) { return last_error.message.c_str(); }
int bs_last_error_stage(void) { return last_error.stage; }
size_t bs_last_error_line(void) { return last_error.line; }
void bs_string_free(char* s) { std::free(s); }

bs_status bs_kind_parse(const char* name, bs_kind* out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    const auto kind = blockseq::parse_kind(name);
    if (!kind) {
      throw blockseq::Error(ErrorCode::kInvalidArgument,
                            std::string("unknown kind ") + name);
    }
    *out = static_cast<bs_kind>(*kind);
  });
}

const char* bs_kind_name(bs_kind kind) {
  if (kind < BS_KIND_PSTS || kind > BS_KIND_BD) return "?";
  return blockseq::kind_name(static_cast<blockseq::DesignKind>(kind)).data();
}

bs_status bs_system_build(bs_kind kind, size_t n, int t, int k, int lambda,
                          const uint32_t* points, size_t num_blocks,
                          int validate, bs_system** out) {
  return guard([&] {
    require(out, "out");
    if (num_blocks > 0) require(points, "points");
    if (k < 1) throw blockseq::Error(ErrorCode::kBadParameters, "k < 1");
    std::vector<blockseq::Block> blocks(num_blocks);
    for (std::size_t b = 0; b < num_blocks; ++b) {
      blocks[b].assign(points + b * static_cast<std::size_t>(k),
                       points + (b + 1) * static_cast<std::size_t>(k));
    }
    *out = wrap(blockseq::BlockSystem::build(to_kind(kind), n, t, k, lambda,
                                             std::move(blocks),
                                             to_validation(validate)));
  });
}

bs_status bs_system_parse(const char* text, int validate, bs_system** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(blockseq::parse_design(text, to_validation(validate)));
  });
}

bs_status bs_system_load(const char* path, int validate, bs_system** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(blockseq::parse_design(blockseq::read_text_file(path),
                                       to_validation(validate)));
  });
}

bs_status bs_system_write(const bs_system* sys, char** out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    *out = dup_string(blockseq::write_design(*sys->sys));
  });
}

void bs_system_free(bs_system* sys) { delete sys; }

bs_status bs_system_get_info(const bs_system* sys, bs_system_info* out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    const blockseq::BlockSystem& s = *sys->sys;
    *out = {static_cast<bs_kind>(s.kind()), s.n(), s.t(), s.k(), s.lambda(),
            s.num_blocks()};
  });
}

bs_status bs_system_block(const bs_system* sys, size_t i, uint32_t* out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    if (i >= sys->sys->num_blocks()) {
      throw blockseq::Error(ErrorCode::kInvalidArgument, "no such block");
    }
    const blockseq::Block& b = sys->sys->block(i);
    std::copy(b.begin(), b.end(), out);
  });
}

bs_status bs_system_validate(const bs_system* sys, size_t* violations) {
  return guard([&] {
    require(sys, "system");
    require(violations, "out");
    *violations = blockseq::validate_system(*sys->sys).violations.size();
  });
}

bs_status bs_gen_skolem_sts(size_t m, bs_system** sys, bs_seq** seq) {
  return guard([&] {
    require(sys, "out");
    auto r = blockseq::skolem_sts(m);
    if (seq != nullptr) *seq = wrap(std::move(r.sequencing));
    *sys = wrap(std::move(r.system));
  });
}

bs_status bs_gen_hamming_sts(int r, bs_system** sys) {
  return guard([&] {
    require(sys, "out");
    *sys = wrap(blockseq::hamming_sts(r));
  });
}

bs_status bs_gen_affine_sts(int r, bs_system** sys) {
  return guard([&] {
    require(sys, "out");
    *sys = wrap(blockseq::affine_sts(r));
  });
}

bs_status bs_gen_boolean_sqs(int r, bs_system** sys) {
  return guard([&] {
    require(sys, "out");
    *sys = wrap(blockseq::boolean_sqs(r));
  });
}

bs_status bs_gen_sqs_quadruple(const bs_system* base, bs_system** sys,
                               bs_seq** seq) {
  return guard([&] {
    require(base, "base");
    require(sys, "out");
    auto r = blockseq::sqs_quadruple(*base->sys);
    if (seq != nullptr) *seq = wrap(std::move(r.sequencing));
    *sys = wrap(std::move(r.system));
  });
}

bs_status bs_seq_from_order(const uint32_t* order, size_t n, bs_seq** out) {
  return guard([&] {
    require(out, "out");
    if (n > 0) require(order, "order");
    *out = wrap(blockseq::Sequencing::from_order(
        std::vector<blockseq::Point>(order, order + n)));
  });
}

bs_status bs_seq_natural(size_t n, bs_seq** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(blockseq::natural_sequencing(n));
  });
}

bs_status bs_seq_parse(const char* text, bs_seq** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(blockseq::parse_seq(text));
  });
}

bs_status bs_seq_load(const char* path, bs_seq** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(blockseq::parse_seq(blockseq::read_text_file(path)));
  });
}

bs_status bs_seq_write(const bs_seq* seq, char** out) {
  return guard([&] {
    require(seq, "sequencing");
    require(out, "out");
    *out = dup_string(blockseq::write_seq(seq->seq));
  });
}

size_t bs_seq_size(const bs_seq* seq) {
  return seq == nullptr ? 0 : seq->seq.size();
}

bs_status bs_seq_order(const bs_seq* seq, uint32_t* out) {
  return guard([&] {
    require(seq, "sequencing");
    require(out, "out");
    std::copy(seq->seq.order().begin(), seq->seq.order().end(), out);
  });
}

void bs_seq_free(bs_seq* seq) { delete seq; }

bs_status bs_first_violation(const bs_system* sys, const bs_seq* seq,
                             size_t ell, int cyclic, bs_violation* out) {
  return guard([&] {
    require(sys, "system");
    require(seq, "sequencing");
    require(out, "out");
    const auto v = blockseq::first_violation(*sys->sys, seq->seq, ell, cyclic);
    *out = bs_violation{};
    if (v) *out = {1, v->window_start, v->window_len, v->block_index};
  });
}

bs_status bs_max_good_ell(const bs_system* sys, const bs_seq* seq, int cyclic,
                          size_t* out) {
  return guard([&] {
    require(sys, "system");
    require(seq, "sequencing");
    require(out, "out");
    if (seq->seq.size() != sys->sys->n()) {
      throw blockseq::Error(ErrorCode::kInvalidArgument,
                            "sequencing size does not match design");
    }
    *out = blockseq::max_good_ell(*sys->sys, seq->seq, cyclic);
  });
}

bs_status bs_constants_for(bs_kind kind, size_t ell, int t, int k, int lambda,
                           bs_constants* out) {
  return guard([&] {
    require(out, "out");
    const auto c = constants(kind, ell, t, k, lambda);
    *out = {c.L, c.Lp, c.K, c.J, c.s, c.Kp, c.sp, c.symmetric ? 1 : 0};
  });
}

bs_status bs_threshold_psts(size_t ell, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = blockseq::threshold_psts(ell);
  });
}

bs_status bs_threshold_general(bs_kind kind, size_t ell, int t, int k,
                               int lambda, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = blockseq::threshold_general(constants(kind, ell, t, k, lambda), ell);
  });
}

bs_status bs_threshold_cyclic(bs_kind kind, size_t ell, int t, int k,
                              int lambda, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = blockseq::threshold_cyclic(constants(kind, ell, t, k, lambda), ell);
  });
}

bs_status bs_sequence(const bs_system* sys, size_t ell, bs_engine engine,
                      uint64_t seed, int strict, bs_seq** out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    *out = nullptr;
    const blockseq::TieRule tie = seed == 0 ? blockseq::TieRule::min()
                                            : blockseq::TieRule::random(seed);
    const blockseq::StagedOptions opts{tie, strict != 0};
    switch (engine) {
      case BS_ENGINE_NAIVE:
      case BS_ENGINE_NAIVE_CYCLIC: {
        auto r = blockseq::naive_greedy(*sys->sys, ell,
                                        engine == BS_ENGINE_NAIVE_CYCLIC, tie);
        if (r) *out = wrap(std::move(*r));
        break;
      }
      case BS_ENGINE_STAGED:
        *out = wrap(blockseq::staged_greedy(*sys->sys, ell, opts));
        break;
      case BS_ENGINE_CYCLIC_STAGED:
        *out = wrap(blockseq::cyclic_staged_greedy(*sys->sys, ell, opts));
        break;
      default:
        throw blockseq::Error(ErrorCode::kInvalidArgument, "unknown engine");
    }
  });
}

uint64_t bs_sv_bound_sts(uint64_t n) { return blockseq::sv_bound_sts(n); }

bs_status bs_easy_bound_feasible(int t, int k, int lambda, uint64_t n,
                                 uint64_t ell, int* out) {
  return guard([&] {
    require(out, "out");
    *out = blockseq::easy_bound_feasible(t, k, lambda, n, ell) ? 1 : 0;
  });
}

bs_status bs_easy_bound_max_ell(int t, int k, int lambda, uint64_t n,
                                uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = blockseq::easy_bound_max_ell(t, k, lambda, n);
  });
}

bs_status bs_svgen_check(int t, int lambda, uint64_t n, uint64_t ell,
                         int* verdict) {
  return guard([&] {
    require(verdict, "out");
    *verdict = static_cast<int>(blockseq::svgen_check(t, lambda, n, ell));
  });
}

bs_status bs_svgen_max_ell(int t, int lambda, uint64_t n, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = blockseq::svgen_max_ell(t, lambda, n);
  });
}

bs_status bs_bi_solve(int t, int lambda, uint64_t n, uint64_t ell, char** out) {
  return guard([&] {
    require(out, "out");
    const blockseq::BiVector v = blockseq::bi_solve(t, lambda, n, ell);
    std::ostringstream os;
    for (std::size_t i = 0; i < v.b.size(); ++i) os << (i ? " " : "") << v.b[i];
    *out = dup_string(os.str());
  });
}

double bs_sqs_alpha_root(void) { return blockseq::sqs_alpha_root(); }

bs_status bs_cyclic_lp(double delta_hat, double eps_hat, double* value,
                       double* x) {
  return guard([&] {
    require(value, "value");
    const blockseq::LpSolution sol =
        blockseq::simplex_solve(blockseq::cyclic_lp(delta_hat, eps_hat));
    *value = sol.value;
    if (x != nullptr) std::copy(sol.x.begin(), sol.x.end(), x);
  });
}

bs_status bs_contradiction_margin(double alpha, double t_hat, double* out) {
  return guard([&] {
    require(out, "out");
    *out = blockseq::contradiction_margin(alpha, t_hat);
  });
}

bs_status bs_profile_counts(const bs_system* sys, const bs_seq* seq, size_t r,
                            size_t delta, size_t eps, char** out) {
  return guard([&] {
    require(sys, "system");
    require(seq, "sequencing");
    require(out, "out");
    const auto pc =
        blockseq::segment_profile_counts(*sys->sys, seq->seq, r, delta, eps);
    std::string text;
    for (const auto& [p, c] : pc.counts) {
      text += blockseq::profile_string(p) + ' ' + std::to_string(c) + '\n';
    }
    *out = dup_string(text);
  });
}

bs_status bs_pair_identity_residual(const bs_system* sys, const bs_seq* seq,
                                    size_t r, size_t delta, size_t eps, int i,
                                    int j, long long* out) {
  return guard([&] {
    require(sys, "system");
    require(seq, "sequencing");
    require(out, "out");
    const auto pc =
        blockseq::segment_profile_counts(*sys->sys, seq->seq, r, delta, eps);
    *out = blockseq::pair_identity_residual(pc, i, j);
  });
}

bs_status bs_alspach_threshold(uint64_t k, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = blockseq::alspach_threshold(k);
  });
}

bs_status bs_pattern_sequence(uint64_t k, size_t n, char** bits) {
  return guard([&] {
    require(bits, "out");
    *bits = dup_string(blockseq::pattern_sequence(k, n).bits);
  });
}

bs_status bs_pattern_check(uint64_t k, size_t n, int ok[3]) {
  return guard([&] {
    require(ok, "out");
    const auto c = blockseq::pattern_properties(blockseq::pattern_sequence(k, n));
    ok[0] = c.a;
    ok[1] = c.b;
    ok[2] = c.c;
  });
}

bs_status bs_max_disjoint_blocks(const bs_system* sys, size_t* k,
                                 uint32_t* points) {
  return guard([&] {
    require(sys, "system");
    require(k, "out");
    const auto d = blockseq::max_disjoint_blocks(*sys->sys);
    *k = d.k;
    if (points != nullptr) std::copy(d.points.begin(), d.points.end(), points);
  });
}

bs_status bs_alspach_sequencing(const bs_system* sys, size_t* k, bs_seq** out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    const auto inst = blockseq::make_sequenceable_instance(*sys->sys);
    if (k != nullptr) *k = inst.k;
    *out = wrap(blockseq::alspach_sequencing(inst));
  });
}

bs_status bs_verify_sequenceable(const bs_system* sys, const bs_seq* seq,
                                 int prune, unsigned threads, bs_segment* out) {
  return guard([&] {
    require(sys, "system");
    require(seq, "sequencing");
    require(out, "out");
    std::vector<blockseq::Point> x;
    if (prune) x = blockseq::max_disjoint_blocks(*sys->sys).points;
    const auto rep = blockseq::verify_sequenceable(
        *sys->sys, seq->seq, prune ? &x : nullptr, threads);
    *out = {rep.sequenceable ? 1 : 0, rep.start, rep.length};
  });
}

bs_status bs_game_new(const bs_system* sys, size_t ell, bs_game** out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    *out = new bs_game{blockseq::new_game(sys->sys, ell)};
  });
}

void bs_game_free(bs_game* game) { delete game; }

bs_status bs_game_move(bs_game* game, uint32_t point) {
  return guard([&] {
    require(game, "game");
    game->state = blockseq::apply_move(game->state, point);
  });
}

bs_status bs_game_bob_reply(const bs_game* game, uint32_t* out) {
  return guard([&] {
    require(game, "game");
    require(out, "out");
    *out = blockseq::bob_reply(game->state);
  });
}

bs_status bs_game_status(const bs_game* game, int* turn, int* outcome,
                         size_t* num_moves) {
  return guard([&] {
    require(game, "game");
    if (turn != nullptr) *turn = static_cast<int>(game->state.turn());
    put_outcome(game->state, outcome);
    if (num_moves != nullptr) *num_moves = game->state.moves().size();
  });
}

bs_status bs_game_moves(const bs_game* game, uint32_t* out) {
  return guard([&] {
    require(game, "game");
    require(out, "out");
    std::copy(game->state.moves().begin(), game->state.moves().end(), out);
  });
}

int bs_game_is_used(const bs_game* game, uint32_t point) {
  if (game == nullptr || point >= game->state.system().n()) return 0;
  return game->state.used(point) ? 1 : 0;
}

bs_status bs_game_exhaustive(int r, size_t ell, unsigned threads,
                             bs_exhaustive* out) {
  return guard([&] {
    require(out, "out");
    const auto e = blockseq::exhaustive_bob_never_loses(r, ell, threads);
    *out = {e.bob_never_loses ? 1 : 0, e.lines, e.alice_losses,
            e.invariant_checks};
  });
}

bs_status bs_oracle_sequencing(const bs_system* sys, size_t ell, int cyclic,
                               unsigned threads, size_t max_n, bs_seq** out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    *out = nullptr;
    auto s = blockseq::backtrack_sequencing(*sys->sys, ell, cyclic, threads,
                                            max_n);
    if (s) *out = wrap(std::move(*s));
  });
}

bs_status bs_oracle_max_ell(const bs_system* sys, int cyclic, unsigned threads,
                            size_t max_n, size_t* out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    *out = blockseq::oracle_max_ell(*sys->sys, cyclic, threads, max_n);
  });
}

bs_status bs_brute_sequenceable(const bs_system* sys, int* out) {
  return guard([&] {
    require(sys, "system");
    require(out, "out");
    *out = blockseq::brute_sequenceable(*sys->sys) ? 1 : 0;
  });
}

}  // extern "C"
