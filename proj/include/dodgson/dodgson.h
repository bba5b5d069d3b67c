/* SPDX-License-Identifier: Apache-2.0 */
#ifndef DODGSON_H
#define DODGSON_H

/*
 * C interface of the Dodgson scoring library.
 *
 * Objects are opaque handles created by *_parse / *_generate / *_compute /
 * *_run and released with the matching *_free. Functions that can fail
 * return a dodgson_status; on failure dodgson_last_error() describes the
 * problem (the message is per thread and valid until the next failing call).
 * Strings returned through char** are owned by the caller and released with
 * dodgson_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DODGSON_BUILDING_LIBRARY)
#    define DODGSON_API __declspec(dllexport)
#  else
#    define DODGSON_API __declspec(dllimport)
#  endif
#else
#  define DODGSON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dodgson_status {
  DODGSON_OK = 0,
  DODGSON_ERR_ARGUMENT = 1,   /* bad argument, unknown alternative, bad scorer/strategy pair */
  DODGSON_ERR_FORMAT = 2,     /* malformed profile text */
  DODGSON_ERR_SIZE_LIMIT = 3, /* materialization would exceed the entry cap */
  DODGSON_ERR_BOUND = 4,      /* swap vector exceeds the position table */
  DODGSON_ERR_INTERNAL = 5
} dodgson_status;

typedef enum dodgson_scorer {
  DODGSON_SCORER_BASELINE = 0,
  DODGSON_SCORER_DFS = 1,
  DODGSON_SCORER_UCS = 2,
  DODGSON_SCORER_SC = 3,
  DODGSON_SCORER_ICR = 4
} dodgson_scorer;

typedef enum dodgson_strategy {
  DODGSON_STRATEGY_FULL = 0,
  DODGSON_STRATEGY_ORDERED = 1,
  DODGSON_STRATEGY_CONCURRENT = 2,
  DODGSON_STRATEGY_CONCURRENT_ORDERED = 3
} dodgson_strategy;

typedef enum dodgson_score_status {
  DODGSON_SCORE_EXACT = 0,
  DODGSON_SCORE_TIMED_OUT = 1,
  DODGSON_SCORE_CAP_EXCEEDED = 2
} dodgson_score_status;

typedef enum dodgson_candidate_status {
  DODGSON_CANDIDATE_EXACT = 0,
  DODGSON_CANDIDATE_LOWER_BOUND = 1,
  DODGSON_CANDIDATE_PRUNED_AT = 2
} dodgson_candidate_status;

typedef enum dodgson_bench_mode {
  DODGSON_MODE_STANDARD = 0,
  DODGSON_MODE_THREADED = 1
} dodgson_bench_mode;

typedef struct dodgson_profile dodgson_profile;
typedef struct dodgson_score dodgson_score;
typedef struct dodgson_tournament dodgson_tournament;

typedef struct dodgson_budget {
  int64_t max_millis; /* < 0: no time limit */
  int64_t score_cap;  /* < 0: no cap (layered scorers only) */
  uint64_t entry_cap; /* 0: library default (1e8) */
  int dfs_prune;      /* nonzero: DFS cuts branches above its incumbent */
} dodgson_budget;

typedef struct dodgson_counters {
  uint64_t condorcet_checks;
  uint64_t nodes_generated;
  uint64_t peak_frontier;
  double elapsed_ms;
} dodgson_counters;

typedef struct dodgson_sweep_config {
  int64_t window_ms;
  uint32_t repetitions;
  dodgson_scorer scorer;
  dodgson_bench_mode mode;
  int odd_n_only;
  uint64_t seed_base;
  uint32_t n_first;
  uint32_t n_last;
  uint32_t m_limit;
  unsigned threads;
} dodgson_sweep_config;

DODGSON_API const char* dodgson_last_error(void);
DODGSON_API void dodgson_string_free(char* s);

DODGSON_API void dodgson_budget_init(dodgson_budget* budget);
DODGSON_API void dodgson_sweep_config_init(dodgson_sweep_config* config);

/* Name lookups: "baseline", "dfs", "ucs", "sc", "icr" and
 * "full", "ordered", "concurrent", "concurrent-ordered". */
DODGSON_API dodgson_status dodgson_scorer_from_name(const char* name, dodgson_scorer* out);
DODGSON_API dodgson_status dodgson_strategy_from_name(const char* name, dodgson_strategy* out);
DODGSON_API const char* dodgson_scorer_name(dodgson_scorer scorer);
DODGSON_API const char* dodgson_strategy_name(dodgson_strategy strategy);

/* ---- profiles ---------------------------------------------------------- */

DODGSON_API dodgson_status dodgson_profile_parse(const char* text, size_t length,
                                                 dodgson_profile** out);
/* Seeded impartial culture profile over A1..Am. */
DODGSON_API dodgson_status dodgson_profile_generate(uint64_t voters, uint64_t alternatives,
                                                    uint64_t seed, dodgson_profile** out);
DODGSON_API void dodgson_profile_free(dodgson_profile* profile);
DODGSON_API dodgson_status dodgson_profile_serialize(const dodgson_profile* profile, char** out);

DODGSON_API size_t dodgson_profile_voters(const dodgson_profile* profile);
DODGSON_API size_t dodgson_profile_alternatives(const dodgson_profile* profile);
/* NULL when alternative is out of range. */
DODGSON_API const char* dodgson_profile_name(const dodgson_profile* profile, size_t alternative);
DODGSON_API dodgson_status dodgson_profile_find(const dodgson_profile* profile, const char* name,
                                                size_t* alternative);

DODGSON_API dodgson_status dodgson_pairwise_tally(const dodgson_profile* profile, size_t a,
                                                  size_t b, size_t* out);
DODGSON_API dodgson_status dodgson_is_condorcet_winner(const dodgson_profile* profile, size_t a,
                                                       int* out);
DODGSON_API dodgson_status dodgson_borda_count(const dodgson_profile* profile, size_t a,
                                               uint64_t* out);
/* Writes min(capacity, m) indices; returns m. */
DODGSON_API size_t dodgson_borda_order(const dodgson_profile* profile, size_t* out,
                                       size_t capacity);

/* ---- single-candidate scoring ------------------------------------------ */

/* budget may be NULL for an unbounded search. */
DODGSON_API dodgson_status dodgson_score_compute(const dodgson_profile* profile, size_t candidate,
                                                 dodgson_scorer scorer,
                                                 const dodgson_budget* budget,
                                                 dodgson_score** out);
DODGSON_API void dodgson_score_free(dodgson_score* score);

DODGSON_API dodgson_score_status dodgson_score_status_of(const dodgson_score* score);
DODGSON_API size_t dodgson_score_candidate(const dodgson_score* score);
DODGSON_API uint32_t dodgson_score_value(const dodgson_score* score);
DODGSON_API uint32_t dodgson_score_lower_bound(const dodgson_score* score);
DODGSON_API size_t dodgson_score_solution_count(const dodgson_score* score);
/* Copies solution `index` (n counts) into `counts`; capacity must be >= n. */
DODGSON_API dodgson_status dodgson_score_solution(const dodgson_score* score, size_t index,
                                                  uint32_t* counts, size_t capacity);
DODGSON_API void dodgson_score_counters(const dodgson_score* score, dodgson_counters* out);

/* ---- tournaments ------------------------------------------------------- */

/* threads == 0 picks min(m, hardware concurrency). */
DODGSON_API dodgson_status dodgson_tournament_run(const dodgson_profile* profile,
                                                  dodgson_strategy strategy,
                                                  dodgson_scorer scorer,
                                                  const dodgson_budget* budget, unsigned threads,
                                                  dodgson_tournament** out);
DODGSON_API void dodgson_tournament_free(dodgson_tournament* outcome);

DODGSON_API int dodgson_tournament_conclusive(const dodgson_tournament* outcome);
/* Returns 0 when no candidate finished exactly. */
DODGSON_API int dodgson_tournament_winning_score(const dodgson_tournament* outcome,
                                                 uint32_t* score);
DODGSON_API uint32_t dodgson_tournament_certified_floor(const dodgson_tournament* outcome);
DODGSON_API size_t dodgson_tournament_winner_count(const dodgson_tournament* outcome);
DODGSON_API size_t dodgson_tournament_winner(const dodgson_tournament* outcome, size_t i);
/* Report for alternative `candidate` (declaration order). */
DODGSON_API dodgson_status dodgson_tournament_candidate(const dodgson_tournament* outcome,
                                                        size_t candidate,
                                                        dodgson_candidate_status* status,
                                                        uint32_t* value,
                                                        dodgson_counters* counters);
DODGSON_API uint64_t dodgson_tournament_total_checks(const dodgson_tournament* outcome);

/* ---- analysis ---------------------------------------------------------- */

/* Exact decimal strings. */
DODGSON_API dodgson_status dodgson_phi_basic(uint32_t n, uint32_t m, char** out);
DODGSON_API dodgson_status dodgson_c_worst(uint32_t n, uint32_t m, char** out);
/* Table rows for m = 1..m_max at fixed n; CSV, or aligned text when pretty. */
DODGSON_API dodgson_status dodgson_analysis_table(uint32_t n, uint32_t m_max, int pretty,
                                                  char** out);

/* ---- benchmarking ------------------------------------------------------ */

DODGSON_API dodgson_status dodgson_bench_average(uint32_t n, uint32_t m, uint32_t runs,
                                                 uint64_t seed_base, dodgson_bench_mode mode,
                                                 const dodgson_scorer* scorers,
                                                 size_t scorer_count, unsigned threads,
                                                 char** csv);
DODGSON_API dodgson_status dodgson_bench_sweep(const dodgson_sweep_config* config, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* DODGSON_H */
