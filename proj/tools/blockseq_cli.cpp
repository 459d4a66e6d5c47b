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

// Command-line front end. Talks to the library only through blockseq.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockseq/blockseq.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAlgorithm = 3;

struct Failure {
  bs_status status;
  std::string message;
};

void check(bs_status s) {
  if (s != BS_OK) throw Failure{s, bs_last_error()};
}

[[noreturn]] void usage_error(const std::string& msg) {
  throw Failure{BS_E_INVALID_ARGUMENT, msg};
}

int exit_code_for(bs_status s) {
  switch (s) {
    case BS_E_STAGE_FAILED:
    case BS_E_REACHABILITY_FAILED:
    case BS_E_COMPLETION_FAILED:
    case BS_E_CONSTANTS_INCONSISTENT:
    case BS_E_INFEASIBLE:
    case BS_E_UNBOUNDED:
    case BS_E_GREEDY_STUCK:
    case BS_E_STRATEGY_INVARIANT:
    case BS_E_INTERNAL:
    case BS_E_OUT_OF_MEMORY:
      return kExitAlgorithm;
    default:
      return kExitUsage;
  }
}

struct SystemDeleter {
  void operator()(bs_system* s) const { bs_system_free(s); }
};
struct SeqDeleter {
  void operator()(bs_seq* s) const { bs_seq_free(s); }
};
struct GameDeleter {
  void operator()(bs_game* g) const { bs_game_free(g); }
};
using System = std::unique_ptr<bs_system, SystemDeleter>;
using Seq = std::unique_ptr<bs_seq, SeqDeleter>;
using Game = std::unique_ptr<bs_game, GameDeleter>;

std::string take_string(char* s) {
  std::string out(s);
  bs_string_free(s);
  return out;
}

System load_system(const std::string& path, bool validate) {
  bs_system* s = nullptr;
  check(bs_system_load(path.c_str(), validate ? 1 : 0, &s));
  return System(s);
}

Seq load_seq(const std::string& path) {
  bs_seq* s = nullptr;
  check(bs_seq_load(path.c_str(), &s));
  return Seq(s);
}

bs_system_info info(const bs_system* s) {
  bs_system_info i{};
  check(bs_system_get_info(s, &i));
  return i;
}

std::vector<uint32_t> order_of(const bs_seq* s) {
  std::vector<uint32_t> v(bs_seq_size(s));
  if (!v.empty()) check(bs_seq_order(s, v.data()));
  return v;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{BS_E_IO, "cannot write " + path};
  out << text;
}

std::string design_text(const bs_system* s) {
  char* t = nullptr;
  check(bs_system_write(s, &t));
  return take_string(t);
}

std::string seq_text(const bs_seq* s) {
  char* t = nullptr;
  check(bs_seq_write(s, &t));
  return take_string(t);
}

unsigned default_threads() {
  if (const char* env = std::getenv("SEQDESIGN_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Globals {
  bool json_out = false;
  unsigned threads = 1;
};

void print_json(const Globals& g, json j) {
  if (!g.json_out) return;
  j["v"] = 1;
  std::cout << j.dump() << '\n';
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
  std::size_t m = 6;
  int r = 3;
  std::size_t n = 0;
  std::string base;
  std::string out = "-";
  std::string seq_out;
};

void add_gen(CLI::App& app, GenArgs& a, int& code, Globals& g) {
  CLI::App* gen = app.add_subcommand("gen", "Generate a design");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("-o,--out", a.out, "Design output path ('-' for stdout)");
  gen->add_option("--seq-out", a.seq_out,
                  "Also write the construction's sequencing here");

  auto finish = [&a, &code, &g](bs_system* s, bs_seq* q, const char* family) {
    System sys(s);
    Seq seq(q);
    emit(a.out, design_text(sys.get()));
    if (!a.seq_out.empty()) {
      if (!seq) usage_error("this family has no built-in sequencing");
      emit(a.seq_out, seq_text(seq.get()));
    }
    const bs_system_info i = info(sys.get());
    if (g.json_out && a.out != "-") {
      print_json(g, {{"command", "gen"},
                     {"family", family},
                     {"kind", bs_kind_name(i.kind)},
                     {"n", i.n},
                     {"blocks", i.num_blocks}});
    }
    code = kExitOk;
  };

  CLI::App* sk = gen->add_subcommand("skolem-sts", "STS(6m+1) from Skolem pairs");
  sk->add_option("--m", a.m, "m = 2 (mod 4)")->required();
  sk->callback([&a, finish] {
    bs_system* s = nullptr;
    bs_seq* q = nullptr;
    check(bs_gen_skolem_sts(a.m, &s, &q));
    finish(s, q, "skolem-sts");
  });

  CLI::App* ham = gen->add_subcommand("hamming", "STS(2^r - 1) from GF(2)^r");
  ham->add_option("--r", a.r, "Dimension")->required();
  ham->callback([&a, finish] {
    bs_system* s = nullptr;
    check(bs_gen_hamming_sts(a.r, &s));
    finish(s, nullptr, "hamming");
  });

  CLI::App* aff = gen->add_subcommand("affine", "STS(3^r) from AG(r,3)");
  aff->add_option("--r", a.r, "Dimension")->required();
  aff->callback([&a, finish] {
    bs_system* s = nullptr;
    check(bs_gen_affine_sts(a.r, &s));
    finish(s, nullptr, "affine");
  });

  CLI::App* bq = gen->add_subcommand("boolean-sqs", "SQS(2^r) from GF(2)^r");
  bq->add_option("--r", a.r, "Dimension")->required();
  bq->callback([&a, finish] {
    bs_system* s = nullptr;
    check(bs_gen_boolean_sqs(a.r, &s));
    finish(s, nullptr, "boolean-sqs");
  });

  CLI::App* quad =
      gen->add_subcommand("sqs-quadruple", "SQS(4m) from an SQS(m), m even");
  quad->add_option("--base", a.base, "Base SQS design file")->required();
  quad->callback([&a, finish] {
    System base = load_system(a.base, true);
    bs_system* s = nullptr;
    bs_seq* q = nullptr;
    check(bs_gen_sqs_quadruple(base.get(), &s, &q));
    finish(s, q, "sqs-quadruple");
  });

  CLI::App* nat = gen->add_subcommand("natural", "Natural sequencing 0..n-1");
  nat->add_option("--n", a.n, "Number of points")->required();
  nat->callback([&a, &code] {
    bs_seq* q = nullptr;
    check(bs_seq_natural(a.n, &q));
    Seq seq(q);
    emit(a.out, seq_text(seq.get()));
    code = kExitOk;
  });
}

// ---- sequence / verify / maxell -----------------------------------------

struct SeqArgs {
  std::string design;
  std::string seq;
  std::size_t ell = 3;
  bool cyclic = false;
  std::string engine = "staged";
  std::uint64_t seed = 0;
  bool strict = false;
  bool no_validate = false;
  std::string out = "-";
};

void print_violation(const Globals& g, const bs_system* sys,
                     const bs_violation& v, std::size_t ell, bool cyclic) {
  const bs_system_info i = info(sys);
  std::vector<uint32_t> block(static_cast<std::size_t>(i.k));
  check(bs_system_block(sys, v.block_index, block.data()));
  if (g.json_out) {
    print_json(g, {{"command", "verify"},
                   {"good", false},
                   {"ell", ell},
                   {"cyclic", cyclic},
                   {"window_start", v.window_start},
                   {"window_len", v.window_len},
                   {"block", block}});
    return;
  }
  std::cout << "violation: window start " << v.window_start << " length "
            << v.window_len << " contains block";
  for (uint32_t p : block) std::cout << ' ' << p;
  std::cout << '\n';
}

void add_sequence(CLI::App& app, SeqArgs& a, int& code, Globals& g) {
  CLI::App* cmd = app.add_subcommand("sequence", "Build an ell-good sequencing");
  cmd->add_option("--design", a.design, "Design file")->required();
  cmd->add_option("--ell", a.ell, "Window length")->required();
  cmd->add_option("--engine", a.engine, "naive | naive-cyclic | staged | cyclic")
      ->check(CLI::IsMember({"naive", "naive-cyclic", "staged", "cyclic"}));
  cmd->add_flag("--cyclic", a.cyclic, "Shorthand for --engine cyclic");
  cmd->add_option("--seed", a.seed, "Random tie-breaking seed (0: smallest id)");
  cmd->add_flag("--strict", a.strict, "Refuse to run below the proven threshold");
  cmd->add_flag("--no-validate", a.no_validate, "Skip design validation");
  cmd->add_option("-o,--out", a.out, "Sequencing output path");
  cmd->callback([&] {
    System sys = load_system(a.design, !a.no_validate);
    std::string engine = a.cyclic ? "cyclic" : a.engine;
    bs_engine e = BS_ENGINE_STAGED;
    if (engine == "naive") e = BS_ENGINE_NAIVE;
    if (engine == "naive-cyclic") e = BS_ENGINE_NAIVE_CYCLIC;
    if (engine == "cyclic") e = BS_ENGINE_CYCLIC_STAGED;
    bs_seq* q = nullptr;
    check(bs_sequence(sys.get(), a.ell, e, a.seed, a.strict ? 1 : 0, &q));
    if (q == nullptr) {
      std::cerr << "naive greedy got stuck\n";
      code = kExitAlgorithm;
      return;
    }
    Seq seq(q);
    emit(a.out, seq_text(seq.get()));
    if (a.out != "-") {
      print_json(g, {{"command", "sequence"}, {"engine", engine},
                     {"ell", a.ell}, {"n", bs_seq_size(seq.get())}});
    }
    code = kExitOk;
  });
}

void add_verify(CLI::App& app, SeqArgs& a, int& code, Globals& g) {
  CLI::App* cmd = app.add_subcommand("verify", "Check that a sequencing is ell-good");
  cmd->add_option("--design", a.design, "Design file")->required();
  cmd->add_option("--seq", a.seq, "Sequencing file")->required();
  cmd->add_option("--ell", a.ell, "Window length")->required();
  cmd->add_flag("--cyclic", a.cyclic, "Let windows wrap around");
  cmd->add_flag("--no-validate", a.no_validate, "Skip design validation");
  cmd->callback([&] {
    System sys = load_system(a.design, !a.no_validate);
    Seq seq = load_seq(a.seq);
    bs_violation v{};
    check(bs_first_violation(sys.get(), seq.get(), a.ell, a.cyclic, &v));
    if (v.found) {
      print_violation(g, sys.get(), v, a.ell, a.cyclic);
      code = kExitRefuted;
      return;
    }
    if (g.json_out) {
      print_json(g, {{"command", "verify"}, {"good", true}, {"ell", a.ell},
                     {"cyclic", a.cyclic}});
    } else {
      std::cout << "good: " << (a.cyclic ? "cyclic " : "") << a.ell
                << "-good\n";
    }
    code = kExitOk;
  });
}

void add_maxell(CLI::App& app, SeqArgs& a, int& code, Globals& g) {
  CLI::App* cmd = app.add_subcommand("maxell", "Largest ell for which a sequencing is good");
  cmd->add_option("--design", a.design, "Design file")->required();
  cmd->add_option("--seq", a.seq, "Sequencing file")->required();
  cmd->add_flag("--cyclic", a.cyclic, "Let windows wrap around");
  cmd->add_flag("--no-validate", a.no_validate, "Skip design validation");
  cmd->callback([&] {
    System sys = load_system(a.design, !a.no_validate);
    Seq seq = load_seq(a.seq);
    std::size_t ell = 0;
    check(bs_max_good_ell(sys.get(), seq.get(), a.cyclic, &ell));
    if (g.json_out) {
      print_json(g, {{"command", "maxell"}, {"cyclic", a.cyclic}, {"max_ell", ell}});
    } else {
      std::cout << ell << '\n';
    }
    code = kExitOk;
  });
}

// ---- bounds -------------------------------------------------------------

struct BoundArgs {
  int t = 2;
  int k = 3;
  int lambda = 1;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> ell;
  double delta = 0.1645;
  double eps = 0.013;
  double alpha = 0.329;
  std::optional<double> t_hat;
  std::string kind = "STS";
  std::string design;
  std::string seq;
  std::size_t r = 0;
  std::size_t seg_delta = 0;
  std::size_t seg_eps = 0;
};

void add_bounds(CLI::App& app, BoundArgs& a, int& code, Globals& g) {
  CLI::App* cmd = app.add_subcommand("bounds", "Upper bounds and LP certificates");
  cmd->require_subcommand(1);
  cmd->fallthrough();

  CLI::App* sv = cmd->add_subcommand("sv", "floor((n+2)/3) for STS");
  sv->add_option("--n", a.n, "Number of points")->required();
  sv->callback([&] {
    const uint64_t b = bs_sv_bound_sts(a.n);
    if (g.json_out) print_json(g, {{"command", "bounds sv"}, {"n", a.n}, {"max_ell", b}});
    else std::cout << b << '\n';
    code = kExitOk;
  });

  CLI::App* svg = cmd->add_subcommand("sv-general", "Bound for S_lambda(t,t+1,n)");
  svg->add_option("--t", a.t, "Strength")->required();
  svg->add_option("--lambda", a.lambda, "Index");
  svg->add_option("--n", a.n, "Number of points")->required();
  svg->add_option("--ell", a.ell, "Test one ell instead of maximizing");
  svg->callback([&] {
    if (a.ell) {
      int verdict = 0;
      check(bs_svgen_check(a.t, a.lambda, a.n, *a.ell, &verdict));
      static const char* names[] = {"feasible", "infeasible", "negative-b"};
      if (g.json_out) {
        print_json(g, {{"command", "bounds sv-general"}, {"ell", *a.ell},
                       {"verdict", names[verdict]}});
      } else {
        std::cout << names[verdict] << '\n';
      }
      code = verdict == 0 ? kExitOk : kExitRefuted;
      return;
    }
    uint64_t m = 0;
    check(bs_svgen_max_ell(a.t, a.lambda, a.n, &m));
    if (g.json_out) print_json(g, {{"command", "bounds sv-general"}, {"max_ell", m}});
    else std::cout << m << '\n';
    code = kExitOk;
  });

  CLI::App* easy = cmd->add_subcommand("easy", "Wide t-subset bound for S_lambda(t,k,n)");
  easy->add_option("--t", a.t, "Strength")->required();
  easy->add_option("--k", a.k, "Block size")->required();
  easy->add_option("--lambda", a.lambda, "Index");
  easy->add_option("--n", a.n, "Number of points")->required();
  easy->add_option("--ell", a.ell, "Test one ell instead of maximizing");
  easy->callback([&] {
    if (a.ell) {
      int ok = 0;
      check(bs_easy_bound_feasible(a.t, a.k, a.lambda, a.n, *a.ell, &ok));
      if (g.json_out) print_json(g, {{"command", "bounds easy"}, {"ell", *a.ell}, {"feasible", ok != 0}});
      else std::cout << (ok ? "feasible" : "infeasible") << '\n';
      code = ok ? kExitOk : kExitRefuted;
      return;
    }
    uint64_t m = 0;
    check(bs_easy_bound_max_ell(a.t, a.k, a.lambda, a.n, &m));
    if (g.json_out) print_json(g, {{"command", "bounds easy"}, {"max_ell", m}});
    else std::cout << m << '\n';
    code = kExitOk;
  });

  CLI::App* bi = cmd->add_subcommand("bi", "Exact b_0..b_{t+1} for S_lambda(t,t+1,n)");
  bi->add_option("--t", a.t, "Strength")->required();
  bi->add_option("--lambda", a.lambda, "Index");
  bi->add_option("--n", a.n, "Number of points")->required();
  bi->add_option("--ell", a.ell, "Prefix length")->required();
  bi->callback([&] {
    char* s = nullptr;
    check(bs_bi_solve(a.t, a.lambda, a.n, *a.ell, &s));
    const std::string text = take_string(s);
    if (g.json_out) {
      std::vector<std::string> parts;
      std::istringstream is(text);
      for (std::string w; is >> w;) parts.push_back(w);
      print_json(g, {{"command", "bounds bi"}, {"b", parts}});
    } else {
      std::cout << text << '\n';
    }
    code = kExitOk;
  });

  CLI::App* root = cmd->add_subcommand("sqs-root", "Smallest positive root of 12x^3-6x^2-2x+1");
  root->callback([&] {
    const double x = bs_sqs_alpha_root();
    if (g.json_out) print_json(g, {{"command", "bounds sqs-root"}, {"alpha", x}});
    else std::printf("%.9f\n", x);
    code = kExitOk;
  });

  CLI::App* lp = cmd->add_subcommand("lp", "Normalized LP lower bound on a_200100");
  lp->add_option("--delta", a.delta, "Normalized segment length");
  lp->add_option("--eps", a.eps, "Normalized remainder (6 delta + eps = 1)");
  lp->callback([&] {
    double value = 0;
    double x[7] = {0};
    check(bs_cyclic_lp(a.delta, a.eps, &value, x));
    if (g.json_out) {
      print_json(g, {{"command", "bounds lp"}, {"value", value},
                     {"x", std::vector<double>(x, x + 7)}});
    } else {
      std::printf("%.8f\n", value);
    }
    code = kExitOk;
  });

  CLI::App* margin = cmd->add_subcommand("margin", "Slack of the closing inequality");
  margin->add_option("--alpha", a.alpha, "ell / n");
  margin->add_option("--t-hat", a.t_hat, "Normalized wide-triple count (default: LP value)");
  margin->add_option("--delta", a.delta, "LP delta when --t-hat is absent");
  margin->add_option("--eps", a.eps, "LP eps when --t-hat is absent");
  margin->callback([&] {
    double t_hat = 0;
    if (a.t_hat) t_hat = *a.t_hat;
    else check(bs_cyclic_lp(a.delta, a.eps, &t_hat, nullptr));
    double m = 0;
    check(bs_contradiction_margin(a.alpha, t_hat, &m));
    if (g.json_out) {
      print_json(g, {{"command", "bounds margin"}, {"alpha", a.alpha},
                     {"t_hat", t_hat}, {"margin", m}});
    } else {
      std::printf("%.9g\n", m);
    }
    code = m > 0 ? kExitOk : kExitRefuted;
  });

  CLI::App* thr = cmd->add_subcommand("threshold", "Point counts above which the engines succeed");
  thr->add_option("--kind", a.kind, "PSTS|STS|SQS|MTS|DTS|BD");
  thr->add_option("--ell", a.ell, "Window length")->required();
  thr->add_option("--t", a.t, "Strength (BD)");
  thr->add_option("--k", a.k, "Block size (BD)");
  thr->add_option("--lambda", a.lambda, "Index (BD)");
  thr->callback([&] {
    bs_kind kind = BS_KIND_STS;
    check(bs_kind_parse(a.kind.c_str(), &kind));
    if (kind == BS_KIND_SQS) {
      a.t = 3;
      a.k = 4;
    }
    uint64_t psts = 0, general = 0, cyclic = 0;
    check(bs_threshold_psts(*a.ell, &psts));
    check(bs_threshold_general(kind, *a.ell, a.t, a.k, a.lambda, &general));
    const bs_status cs = bs_threshold_cyclic(kind, *a.ell, a.t, a.k, a.lambda, &cyclic);
    if (cs != BS_OK && cs != BS_E_CONSTANTS_INCONSISTENT) check(cs);
    json j = {{"command", "bounds threshold"}, {"kind", a.kind}, {"ell", *a.ell},
              {"psts", psts}, {"general", general}};
    if (cs == BS_OK) j["cyclic"] = cyclic;
    if (g.json_out) {
      print_json(g, j);
    } else {
      std::cout << "psts " << psts << "\ngeneral " << general << "\ncyclic ";
      if (cs == BS_OK) std::cout << cyclic << '\n';
      else std::cout << "n/a\n";
    }
    code = kExitOk;
  });

  CLI::App* prof = cmd->add_subcommand("profiles", "Block profile counts over six segments");
  prof->add_option("--design", a.design, "Design file")->required();
  prof->add_option("--seq", a.seq, "Sequencing file")->required();
  prof->add_option("--r", a.r, "Shift");
  prof->add_option("--delta", a.seg_delta, "Segment length")->required();
  prof->add_option("--eps", a.seg_eps, "Remainder length")->required();
  prof->callback([&] {
    System sys = load_system(a.design, true);
    Seq seq = load_seq(a.seq);
    char* s = nullptr;
    check(bs_profile_counts(sys.get(), seq.get(), a.r, a.seg_delta, a.seg_eps, &s));
    const std::string text = take_string(s);
    if (g.json_out) {
      json counts = json::object();
      std::istringstream is(text);
      std::string p;
      std::uint64_t c = 0;
      while (is >> p >> c) counts[p] = c;
      json residuals = json::object();
      for (int i = 1; i <= 7; ++i) {
        for (int j = i; j <= 7; ++j) {
          long long res = 0;
          check(bs_pair_identity_residual(sys.get(), seq.get(), a.r, a.seg_delta,
                                          a.seg_eps, i, j, &res));
          residuals[std::to_string(i) + std::to_string(j)] = res;
        }
      }
      print_json(g, {{"command", "bounds profiles"}, {"r", a.r},
                     {"counts", counts}, {"pair_residuals", residuals}});
    } else {
      std::cout << text;
    }
    code = kExitOk;
  });
}

// ---- sequenceable -------------------------------------------------------

struct SeqableArgs {
  std::string design;
  bool construct = false;
  std::string check_path;
  std::string out;
  bool no_prune = false;
  bool brute = false;
};

void add_sequenceable(CLI::App& app, SeqableArgs& a, int& code, Globals& g) {
  CLI::App* cmd = app.add_subcommand("sequenceable", "Sequenceable partial triple systems");
  cmd->add_option("--design", a.design, "PSTS design file")->required();
  auto* c1 = cmd->add_flag("--construct", a.construct, "Build a sequencing and verify it");
  auto* c2 = cmd->add_option("--check", a.check_path, "Verify the given sequencing file");
  auto* c3 = cmd->add_flag("--brute", a.brute, "Exhaustive search (n <= 9)");
  c1->excludes(c2)->excludes(c3);
  c2->excludes(c3);
  cmd->add_option("-o,--out", a.out, "Where --construct writes the sequencing");
  cmd->add_flag("--no-prune", a.no_prune, "Check every segment by exact cover");
  cmd->callback([&] {
    System sys = load_system(a.design, true);
    if (a.brute) {
      int ok = 0;
      check(bs_brute_sequenceable(sys.get(), &ok));
      if (g.json_out) print_json(g, {{"command", "sequenceable"}, {"sequenceable", ok != 0}});
      else std::cout << (ok ? "sequenceable" : "not sequenceable") << '\n';
      code = ok ? kExitOk : kExitRefuted;
      return;
    }
    Seq seq;
    std::size_t k = 0;
    if (a.construct) {
      bs_seq* q = nullptr;
      check(bs_alspach_sequencing(sys.get(), &k, &q));
      seq.reset(q);
      if (!a.out.empty()) emit(a.out, seq_text(seq.get()));
    } else if (!a.check_path.empty()) {
      seq = load_seq(a.check_path);
    } else {
      usage_error("one of --construct, --check or --brute is required");
    }
    bs_segment seg{};
    check(bs_verify_sequenceable(sys.get(), seq.get(), a.no_prune ? 0 : 1,
                                 g.threads, &seg));
    if (g.json_out) {
      json j = {{"command", "sequenceable"}, {"sequenceable", seg.sequenceable != 0}};
      if (a.construct) j["k"] = k;
      if (!seg.sequenceable) {
        j["segment_start"] = seg.start;
        j["segment_length"] = seg.length;
      }
      print_json(g, j);
    } else if (seg.sequenceable) {
      std::cout << "sequenceable: no segment is a disjoint union of blocks\n";
    } else {
      std::cout << "refuted: segment start " << seg.start << " length "
                << seg.length << " is a disjoint union of blocks\n";
    }
    code = seg.sequenceable ? kExitOk : kExitRefuted;
  });
}

// ---- game ---------------------------------------------------------------

struct GameArgs {
  std::string system = "hamming";
  int r = 3;
  std::size_t ell = 3;
  std::string mode = "exhaustive";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

const char* outcome_text(int o) {
  switch (o) {
    case 0: return "AliceLoses";
    case 1: return "BobLoses";
    case 2: return "Draw";
    default: return "Running";
  }
}

Game fresh_game(const GameArgs& a) {
  bs_system* s = nullptr;
  check(bs_gen_hamming_sts(a.r, &s));
  System sys(s);
  bs_game* game = nullptr;
  check(bs_game_new(sys.get(), a.ell, &game));
  return Game(game);
}

int game_outcome(const bs_game* game, std::size_t* moves = nullptr) {
  int outcome = -1;
  check(bs_game_status(game, nullptr, &outcome, moves));
  return outcome;
}

void bob_move(bs_game* game) {
  uint32_t reply = 0;
  check(bs_game_bob_reply(game, &reply));
  check(bs_game_move(game, reply));
}

std::vector<uint32_t> game_moves(const bs_game* game) {
  std::size_t n = 0;
  game_outcome(game, &n);
  std::vector<uint32_t> m(n);
  if (n > 0) check(bs_game_moves(game, m.data()));
  return m;
}

int run_interactive(const GameArgs& a, const Globals& g) {
  Game game = fresh_game(a);
  const std::size_t n = (std::size_t{1} << a.r) - 1;
  std::cout << "Points are labels 1.." << n << ". Commands: <label>, legal, "
            << "moves, resign.\n";
  std::string line;
  while (game_outcome(game.get()) < 0) {
    std::cout << "alice> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    std::istringstream is(line);
    std::string cmd;
    if (!(is >> cmd)) continue;
    if (cmd == "resign") {
      std::cout << "Alice resigns.\n";
      return kExitRefuted;
    }
    if (cmd == "legal" || cmd == "moves") {
      for (uint32_t p = 0; p < n; ++p) {
        if ((cmd == "legal") != (bs_game_is_used(game.get(), p) != 0)) {
          std::cout << p + 1 << ' ';
        }
      }
      if (cmd == "moves") {
        std::cout << "| in order:";
        for (uint32_t p : game_moves(game.get())) std::cout << ' ' << p + 1;
      }
      std::cout << '\n';
      continue;
    }
    unsigned long label = 0;
    try {
      label = std::stoul(cmd);
    } catch (const std::exception&) {
      std::cout << "unknown command\n";
      continue;
    }
    if (label < 1 || label > n) {
      std::cout << "label out of range\n";
      continue;
    }
    if (bs_game_move(game.get(), static_cast<uint32_t>(label - 1)) != BS_OK) {
      std::cout << bs_last_error() << '\n';
      continue;
    }
    if (game_outcome(game.get()) >= 0) break;
    uint32_t reply = 0;
    check(bs_game_bob_reply(game.get(), &reply));
    check(bs_game_move(game.get(), reply));
    std::cout << "bob plays " << reply + 1 << '\n';
  }
  const int o = game_outcome(game.get());
  std::cout << "outcome: " << outcome_text(o) << '\n';
  std::vector<uint32_t> labels;
  for (uint32_t p : game_moves(game.get())) labels.push_back(p + 1);
  if (g.json_out) {
    print_json(g, {{"command", "game"}, {"mode", "interactive"},
                   {"outcome", outcome_text(o)}, {"moves", labels}});
  }
  return o == 0 ? kExitOk : kExitRefuted;
}

int run_random(const GameArgs& a, const Globals& g) {
  std::mt19937_64 rng(a.seed);
  std::size_t alice_losses = 0, bob_losses = 0, draws = 0;
  json games = json::array();
  for (std::size_t trial = 0; trial < a.trials; ++trial) {
    Game game = fresh_game(a);
    const std::size_t n = (std::size_t{1} << a.r) - 1;
    while (game_outcome(game.get()) < 0) {
      std::vector<uint32_t> legal;
      for (uint32_t p = 0; p < n; ++p) {
        if (!bs_game_is_used(game.get(), p)) legal.push_back(p);
      }
      std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
      check(bs_game_move(game.get(), legal[pick(rng)]));
      if (game_outcome(game.get()) < 0) bob_move(game.get());
    }
    const int o = game_outcome(game.get());
    (o == 0 ? alice_losses : o == 1 ? bob_losses : draws)++;
    if (g.json_out) {
      std::vector<uint32_t> labels;
      for (uint32_t p : game_moves(game.get())) labels.push_back(p + 1);
      games.push_back({{"outcome", outcome_text(o)}, {"moves", labels}});
    }
  }
  if (g.json_out) {
    print_json(g, {{"command", "game"}, {"mode", "random"}, {"trials", a.trials},
                   {"alice_losses", alice_losses}, {"bob_losses", bob_losses},
                   {"draws", draws}, {"games", games}});
  } else {
    std::cout << "trials " << a.trials << ": AliceLoses " << alice_losses
              << ", BobLoses " << bob_losses << ", Draw " << draws << '\n';
  }
  return alice_losses == a.trials ? kExitOk : kExitRefuted;
}

int run_exhaustive(const GameArgs& a, const Globals& g) {
  bs_exhaustive e{};
  check(bs_game_exhaustive(a.r, a.ell, g.threads, &e));
  if (g.json_out) {
    print_json(g, {{"command", "game"}, {"mode", "exhaustive"}, {"r", a.r},
                   {"ell", a.ell}, {"bob_never_loses", e.bob_never_loses != 0},
                   {"lines", e.lines}, {"alice_losses", e.alice_losses},
                   {"invariant_checks", e.invariant_checks}});
  } else {
    std::cout << "bob never loses: " << (e.bob_never_loses ? "yes" : "no")
              << "\nlines: " << e.lines << "\nalice losses: " << e.alice_losses
              << "\ninvariant checks: " << e.invariant_checks << '\n';
  }
  return e.bob_never_loses ? kExitOk : kExitRefuted;
}

void add_game(CLI::App& app, GameArgs& a, int& code, Globals& g) {
  CLI::App* cmd = app.add_subcommand("game", "Alice/Bob sequencing game");
  cmd->add_option("--system", a.system, "Only 'hamming' is supported")
      ->check(CLI::IsMember({"hamming"}));
  cmd->add_option("--r", a.r, "Hamming dimension");
  cmd->add_option("--ell", a.ell, "Window length (>= 3)");
  cmd->add_option("--mode", a.mode, "interactive | random | exhaustive")
      ->check(CLI::IsMember({"interactive", "random", "exhaustive"}));
  cmd->add_option("--trials", a.trials, "Games in random mode");
  cmd->add_option("--seed", a.seed, "Seed for random mode");
  cmd->callback([&] {
    if (a.mode == "interactive") code = run_interactive(a, g);
    else if (a.mode == "random") code = run_random(a, g);
    else code = run_exhaustive(a, g);
  });
}

// ---- oracle -------------------------------------------------------------

struct OracleArgs {
  std::string design;
  std::size_t ell = 3;
  bool cyclic = false;
  bool max_ell = false;
  std::size_t max_n = 16;
  std::string out = "-";
};

void add_oracle(CLI::App& app, OracleArgs& a, int& code, Globals& g) {
  CLI::App* cmd = app.add_subcommand("oracle", "Exhaustive search for good sequencings");
  cmd->add_option("--design", a.design, "Design file")->required();
  cmd->add_option("--ell", a.ell, "Window length");
  cmd->add_flag("--cyclic", a.cyclic, "Let windows wrap around");
  cmd->add_flag("--max-ell", a.max_ell, "Report the largest attainable ell");
  cmd->add_option("--max-n", a.max_n, "Refuse systems with more points");
  cmd->add_option("-o,--out", a.out, "Witness output path");
  cmd->callback([&] {
    System sys = load_system(a.design, true);
    if (a.max_ell) {
      std::size_t m = 0;
      check(bs_oracle_max_ell(sys.get(), a.cyclic, g.threads, a.max_n, &m));
      if (g.json_out) {
        print_json(g, {{"command", "oracle"}, {"cyclic", a.cyclic}, {"max_ell", m}});
      } else {
        std::cout << m << '\n';
      }
      code = kExitOk;
      return;
    }
    bs_seq* q = nullptr;
    check(bs_oracle_sequencing(sys.get(), a.ell, a.cyclic, g.threads, a.max_n, &q));
    Seq seq(q);
    if (!seq) {
      if (g.json_out) print_json(g, {{"command", "oracle"}, {"found", false}});
      else std::cout << "none\n";
      code = kExitRefuted;
      return;
    }
    if (g.json_out) {
      print_json(g, {{"command", "oracle"}, {"found", true},
                     {"order", order_of(seq.get())}});
    } else {
      emit(a.out, seq_text(seq.get()));
    }
    code = kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Good sequencings of block designs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  g.threads = default_threads();
  app.add_flag("--json", g.json_out, "Machine-readable output (schema v1)");
  app.add_option("--threads", g.threads,
                 "Worker threads (default: SEQDESIGN_THREADS or 1)");

  int code = kExitOk;
  GenArgs gen;
  SeqArgs seq;
  BoundArgs bounds;
  SeqableArgs seqable;
  GameArgs game;
  OracleArgs oracle;
  add_gen(app, gen, code, g);
  add_sequence(app, seq, code, g);
  add_verify(app, seq, code, g);
  add_maxell(app, seq, code, g);
  add_bounds(app, bounds, code, g);
  add_sequenceable(app, seqable, code, g);
  add_game(app, game, code, g);
  add_oracle(app, oracle, code, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << bs_status_name(f.status) << ": " << f.message;
    if (f.status == BS_E_STAGE_FAILED) std::cerr << " (stage " << bs_last_error_stage() << ")";
    std::cerr << '\n';
    return exit_code_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}
