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

/* Stable C interface to the blockseq library. */
#ifndef BLOCKSEQ_BLOCKSEQ_H_
#define BLOCKSEQ_BLOCKSEQ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BLOCKSEQ_API
#elif defined(BLOCKSEQ_BUILDING)
#define BLOCKSEQ_API __attribute__((visibility("default")))
#else
#define BLOCKSEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. BS_OK is zero; the rest name the failure. */
typedef enum bs_status {
  BS_OK = 0,
  BS_E_INVALID_ARGUMENT,
  BS_E_POINT_OUT_OF_RANGE,
  BS_E_DUPLICATE_BLOCK,
  BS_E_REPEATED_POINT_IN_BLOCK,
  BS_E_BAD_BLOCK_SIZE,
  BS_E_BAD_PARAMETERS,
  BS_E_INVALID_DESIGN,
  BS_E_SUBSET_TOO_LARGE,
  BS_E_PARSE,
  BS_E_IO,
  BS_E_BAD_RESIDUE,
  BS_E_ODD_ORDER,
  BS_E_INVALID_BASE,
  BS_E_EMPTY_UNIVERSE,
  BS_E_UNSUPPORTED_KIND,
  BS_E_CONSTANTS_INCONSISTENT,
  BS_E_STAGE_FAILED,
  BS_E_REACHABILITY_FAILED,
  BS_E_COMPLETION_FAILED,
  BS_E_INFEASIBLE,
  BS_E_UNBOUNDED,
  BS_E_BAD_PARTITION,
  BS_E_TOO_SHORT,
  BS_E_TOO_LARGE_FOR_EXACT,
  BS_E_GREEDY_STUCK,
  BS_E_ELL_TOO_SMALL,
  BS_E_POINT_USED,
  BS_E_GAME_OVER,
  BS_E_NOT_HAMMING_SYSTEM,
  BS_E_STRATEGY_INVARIANT,
  BS_E_TOO_LARGE,
  BS_E_INTERNAL,
  BS_E_OUT_OF_MEMORY
} bs_status;

typedef enum bs_kind {
  BS_KIND_PSTS = 0,
  BS_KIND_STS,
  BS_KIND_SQS,
  BS_KIND_MTS,
  BS_KIND_DTS,
  BS_KIND_BD
} bs_kind;

typedef struct bs_system bs_system;
typedef struct bs_seq bs_seq;
typedef struct bs_game bs_game;

/* Errors. The message and details describe the last failure on the
 * calling thread. */
BLOCKSEQ_API const char* bs_status_name(bs_status status);
BLOCKSEQ_API const char* bs_last_error(void);
BLOCKSEQ_API int bs_last_error_stage(void);   /* StageFailed stage, else 0 */
BLOCKSEQ_API size_t bs_last_error_line(void); /* parse errors, else 0 */

/* Strings returned by the library are released with bs_string_free. */
BLOCKSEQ_API void bs_string_free(char* s);

/* Systems. */
typedef struct bs_system_info {
  bs_kind kind;
  size_t n;
  int t;
  int k;
  int lambda;
  size_t num_blocks;
} bs_system_info;

BLOCKSEQ_API bs_status bs_kind_parse(const char* name, bs_kind* out);
BLOCKSEQ_API const char* bs_kind_name(bs_kind kind);

/* `points` holds num_blocks * k ids, block after block. */
BLOCKSEQ_API bs_status bs_system_build(bs_kind kind, size_t n, int t, int k,
                                       int lambda, const uint32_t* points,
                                       size_t num_blocks, int validate,
                                       bs_system** out);
BLOCKSEQ_API bs_status bs_system_parse(const char* text, int validate,
                                       bs_system** out);
BLOCKSEQ_API bs_status bs_system_load(const char* path, int validate,
                                      bs_system** out);
BLOCKSEQ_API bs_status bs_system_write(const bs_system* sys, char** out);
BLOCKSEQ_API void bs_system_free(bs_system* sys);
BLOCKSEQ_API bs_status bs_system_get_info(const bs_system* sys,
                                          bs_system_info* out);
/* Copies block i (k ids) into `out`. */
BLOCKSEQ_API bs_status bs_system_block(const bs_system* sys, size_t i,
                                       uint32_t* out);
/* Number of violated subset conditions; zero means valid. */
BLOCKSEQ_API bs_status bs_system_validate(const bs_system* sys,
                                          size_t* violations);

/* Generators. Sequencing outputs may be NULL when not wanted. */
BLOCKSEQ_API bs_status bs_gen_skolem_sts(size_t m, bs_system** sys,
                                         bs_seq** seq);
BLOCKSEQ_API bs_status bs_gen_hamming_sts(int r, bs_system** sys);
BLOCKSEQ_API bs_status bs_gen_affine_sts(int r, bs_system** sys);
BLOCKSEQ_API bs_status bs_gen_boolean_sqs(int r, bs_system** sys);
BLOCKSEQ_API bs_status bs_gen_sqs_quadruple(const bs_system* base,
                                            bs_system** sys, bs_seq** seq);

/* Sequencings. */
BLOCKSEQ_API bs_status bs_seq_from_order(const uint32_t* order, size_t n,
                                         bs_seq** out);
BLOCKSEQ_API bs_status bs_seq_natural(size_t n, bs_seq** out);
BLOCKSEQ_API bs_status bs_seq_parse(const char* text, bs_seq** out);
BLOCKSEQ_API bs_status bs_seq_load(const char* path, bs_seq** out);
BLOCKSEQ_API bs_status bs_seq_write(const bs_seq* seq, char** out);
BLOCKSEQ_API size_t bs_seq_size(const bs_seq* seq);
/* Copies the n ids into `out`. */
BLOCKSEQ_API bs_status bs_seq_order(const bs_seq* seq, uint32_t* out);
BLOCKSEQ_API void bs_seq_free(bs_seq* seq);

/* Goodness. */
typedef struct bs_violation {
  int found;
  size_t window_start;
  size_t window_len;
  size_t block_index;
} bs_violation;

BLOCKSEQ_API bs_status bs_first_violation(const bs_system* sys,
                                          const bs_seq* seq, size_t ell,
                                          int cyclic, bs_violation* out);
BLOCKSEQ_API bs_status bs_max_good_ell(const bs_system* sys, const bs_seq* seq,
                                       int cyclic, size_t* out);

/* Sequencing engines. */
typedef enum bs_engine {
  BS_ENGINE_NAIVE = 0,
  BS_ENGINE_STAGED,
  BS_ENGINE_CYCLIC_STAGED,
  BS_ENGINE_NAIVE_CYCLIC
} bs_engine;

typedef struct bs_constants {
  uint64_t L, Lp, K, J, s, Kp, sp;
  int symmetric;
} bs_constants;

BLOCKSEQ_API bs_status bs_constants_for(bs_kind kind, size_t ell, int t, int k,
                                        int lambda, bs_constants* out);
BLOCKSEQ_API bs_status bs_threshold_psts(size_t ell, uint64_t* out);
BLOCKSEQ_API bs_status bs_threshold_general(bs_kind kind, size_t ell, int t,
                                            int k, int lambda, uint64_t* out);
BLOCKSEQ_API bs_status bs_threshold_cyclic(bs_kind kind, size_t ell, int t,
                                           int k, int lambda, uint64_t* out);
/* `*out` stays NULL when the naive engine gets stuck. A nonzero `seed`
 * selects uniform random tie-breaking; zero picks the smallest id. */
BLOCKSEQ_API bs_status bs_sequence(const bs_system* sys, size_t ell,
                                   bs_engine engine, uint64_t seed, int strict,
                                   bs_seq** out);

/* Bounds. */
BLOCKSEQ_API uint64_t bs_sv_bound_sts(uint64_t n);
BLOCKSEQ_API bs_status bs_easy_bound_feasible(int t, int k, int lambda,
                                              uint64_t n, uint64_t ell,
                                              int* out);
BLOCKSEQ_API bs_status bs_easy_bound_max_ell(int t, int k, int lambda,
                                             uint64_t n, uint64_t* out);
/* verdict: 0 feasible, 1 infeasible, 2 some b_i negative. */
BLOCKSEQ_API bs_status bs_svgen_check(int t, int lambda, uint64_t n,
                                      uint64_t ell, int* verdict);
BLOCKSEQ_API bs_status bs_svgen_max_ell(int t, int lambda, uint64_t n,
                                        uint64_t* out);
/* b_0 .. b_{t+1} as exact rationals separated by spaces. */
BLOCKSEQ_API bs_status bs_bi_solve(int t, int lambda, uint64_t n, uint64_t ell,
                                   char** out);
BLOCKSEQ_API double bs_sqs_alpha_root(void);
/* `x` receives 7 values (may be NULL). */
BLOCKSEQ_API bs_status bs_cyclic_lp(double delta_hat, double eps_hat,
                                    double* value, double* x);
BLOCKSEQ_API bs_status bs_contradiction_margin(double alpha, double t_hat,
                                               double* out);
/* Lines "<six digits> <count>" in profile order. */
BLOCKSEQ_API bs_status bs_profile_counts(const bs_system* sys,
                                         const bs_seq* seq, size_t r,
                                         size_t delta, size_t eps, char** out);
BLOCKSEQ_API bs_status bs_pair_identity_residual(const bs_system* sys,
                                                 const bs_seq* seq, size_t r,
                                                 size_t delta, size_t eps,
                                                 int i, int j, long long* out);

/* Sequenceable partial triple systems. */
typedef struct bs_segment {
  int sequenceable;
  size_t start;
  size_t length;
} bs_segment;

BLOCKSEQ_API bs_status bs_alspach_threshold(uint64_t k, uint64_t* out);
BLOCKSEQ_API bs_status bs_pattern_sequence(uint64_t k, size_t n, char** bits);
/* ok[0..2] receive properties (a), (b), (c). */
BLOCKSEQ_API bs_status bs_pattern_check(uint64_t k, size_t n, int ok[3]);
/* `points` receives 3k ids when non-NULL; it needs room for n ids. */
BLOCKSEQ_API bs_status bs_max_disjoint_blocks(const bs_system* sys,
                                              size_t* k, uint32_t* points);
BLOCKSEQ_API bs_status bs_alspach_sequencing(const bs_system* sys, size_t* k,
                                             bs_seq** out);
/* With `prune`, segments are skipped by the disjoint-block witness. */
BLOCKSEQ_API bs_status bs_verify_sequenceable(const bs_system* sys,
                                              const bs_seq* seq, int prune,
                                              unsigned threads,
                                              bs_segment* out);

/* Sequencing game. Players: 0 Alice, 1 Bob. Outcomes: -1 running,
 * 0 Alice loses, 1 Bob loses, 2 draw. */
BLOCKSEQ_API bs_status bs_game_new(const bs_system* sys, size_t ell,
                                   bs_game** out);
BLOCKSEQ_API void bs_game_free(bs_game* game);
BLOCKSEQ_API bs_status bs_game_move(bs_game* game, uint32_t point);
BLOCKSEQ_API bs_status bs_game_bob_reply(const bs_game* game, uint32_t* out);
BLOCKSEQ_API bs_status bs_game_status(const bs_game* game, int* turn,
                                      int* outcome, size_t* num_moves);
BLOCKSEQ_API bs_status bs_game_moves(const bs_game* game, uint32_t* out);
BLOCKSEQ_API int bs_game_is_used(const bs_game* game, uint32_t point);

typedef struct bs_exhaustive {
  int bob_never_loses;
  uint64_t lines;
  uint64_t alice_losses;
  uint64_t invariant_checks;
} bs_exhaustive;

BLOCKSEQ_API bs_status bs_game_exhaustive(int r, size_t ell, unsigned threads,
                                          bs_exhaustive* out);

/* Oracles. */
BLOCKSEQ_API bs_status bs_oracle_sequencing(const bs_system* sys, size_t ell,
                                            int cyclic, unsigned threads,
                                            size_t max_n, bs_seq** out);
BLOCKSEQ_API bs_status bs_oracle_max_ell(const bs_system* sys, int cyclic,
                                         unsigned threads, size_t max_n,
                                         size_t* out);
BLOCKSEQ_API bs_status bs_brute_sequenceable(const bs_system* sys, int* out);

#ifdef __cplusplus
}
#endif

#endif /* BLOCKSEQ_BLOCKSEQ_H_ */
