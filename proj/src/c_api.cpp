// SPDX-License-Identifier: Apache-2.0
#include "dodgson/dodgson.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dodgson/analysis.hpp"
#include "dodgson/bench.hpp"
#include "dodgson/error.hpp"
#include "dodgson/profile.hpp"
#include "dodgson/scorers.hpp"
#include "dodgson/tournament.hpp"

struct dodgson_profile {
  dodgson::PreferenceProfile value;
};

struct dodgson_score {
  dodgson::ScoreResult value;
};

struct dodgson_tournament {
  dodgson::TournamentOutcome value;
};

namespace {

thread_local std::string g_last_error;

dodgson_status fail(dodgson_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, mapping library exceptions onto status codes.
template <class F>
dodgson_status guarded(F&& body) noexcept {
  try {
    body();
    return DODGSON_OK;
  } catch (const dodgson::FormatError& e) {
    return fail(DODGSON_ERR_FORMAT, e.what());
  } catch (const dodgson::SizeLimitError& e) {
    return fail(DODGSON_ERR_SIZE_LIMIT, e.what());
  } catch (const dodgson::BoundViolation& e) {
    return fail(DODGSON_ERR_BOUND, e.what());
  } catch (const dodgson::UsageError& e) {
    return fail(DODGSON_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DODGSON_ERR_SIZE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(DODGSON_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DODGSON_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dodgson::ScoreBudget to_budget(const dodgson_budget* b) {
  dodgson::ScoreBudget budget;
  if (!b) return budget;
  if (b->max_millis >= 0) budget.max_millis = b->max_millis;
  if (b->score_cap >= 0) budget.score_cap = static_cast<std::uint32_t>(b->score_cap);
  if (b->entry_cap) budget.entry_cap = b->entry_cap;
  budget.dfs_prune = b->dfs_prune != 0;
  return budget;
}

dodgson::ScorerKind to_kind(dodgson_scorer s) {
  if (s < DODGSON_SCORER_BASELINE || s > DODGSON_SCORER_ICR) {
    throw dodgson::UsageError("unknown scorer id " + std::to_string(static_cast<int>(s)));
  }
  return static_cast<dodgson::ScorerKind>(s);
}

dodgson::TournamentStrategy to_strategy(dodgson_strategy s) {
  if (s < DODGSON_STRATEGY_FULL || s > DODGSON_STRATEGY_CONCURRENT_ORDERED) {
    throw dodgson::UsageError("unknown strategy id " + std::to_string(static_cast<int>(s)));
  }
  return static_cast<dodgson::TournamentStrategy>(s);
}

dodgson::bench::Mode to_mode(dodgson_bench_mode m) {
  return m == DODGSON_MODE_THREADED ? dodgson::bench::Mode::Threaded
                                    : dodgson::bench::Mode::Standard;
}

dodgson::Alternative to_alt(const dodgson_profile* p, std::size_t a) {
  if (a >= p->value.alternatives()) {
    throw dodgson::UsageError("alternative index " + std::to_string(a) + " out of range");
  }
  return dodgson::Alternative(static_cast<std::uint32_t>(a));
}

void copy_counters(const dodgson::InstrumentationCounters& in, dodgson_counters* out) {
  out->condorcet_checks = in.condorcet_checks;
  out->nodes_generated = in.nodes_generated;
  out->peak_frontier = in.peak_frontier;
  out->elapsed_ms = in.elapsed_ms;
}

template <class T>
dodgson_status require(const T* p, const char* what) {
  return p ? DODGSON_OK : fail(DODGSON_ERR_ARGUMENT, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* dodgson_last_error(void) { return g_last_error.c_str(); }

void dodgson_string_free(char* s) { std::free(s); }

void dodgson_budget_init(dodgson_budget* budget) {
  if (!budget) return;
  budget->max_millis = -1;
  budget->score_cap = -1;
  budget->entry_cap = 0;
  budget->dfs_prune = 0;
}

void dodgson_sweep_config_init(dodgson_sweep_config* c) {
  if (!c) return;
  const dodgson::bench::SweepConfig d;
  c->window_ms = d.window_ms;
  c->repetitions = d.repetitions;
  c->scorer = static_cast<dodgson_scorer>(d.scorer);
  c->mode = d.mode == dodgson::bench::Mode::Threaded ? DODGSON_MODE_THREADED : DODGSON_MODE_STANDARD;
  c->odd_n_only = d.odd_n_only;
  c->seed_base = d.seed_base;
  c->n_first = d.n_first;
  c->n_last = d.n_last;
  c->m_limit = d.m_limit;
  c->threads = d.threads;
}

dodgson_status dodgson_scorer_from_name(const char* name, dodgson_scorer* out) {
  if (!name || !out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  auto k = dodgson::parse_scorer(name);
  if (!k) return fail(DODGSON_ERR_ARGUMENT, std::string("unknown scorer ") + name);
  *out = static_cast<dodgson_scorer>(*k);
  return DODGSON_OK;
}

dodgson_status dodgson_strategy_from_name(const char* name, dodgson_strategy* out) {
  if (!name || !out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  auto s = dodgson::parse_strategy(name);
  if (!s) return fail(DODGSON_ERR_ARGUMENT, std::string("unknown strategy ") + name);
  *out = static_cast<dodgson_strategy>(*s);
  return DODGSON_OK;
}

const char* dodgson_scorer_name(dodgson_scorer scorer) {
  if (scorer < DODGSON_SCORER_BASELINE || scorer > DODGSON_SCORER_ICR) return "?";
  return dodgson::to_string(static_cast<dodgson::ScorerKind>(scorer)).data();
}

const char* dodgson_strategy_name(dodgson_strategy strategy) {
  if (strategy < DODGSON_STRATEGY_FULL || strategy > DODGSON_STRATEGY_CONCURRENT_ORDERED) return "?";
  return dodgson::to_string(static_cast<dodgson::TournamentStrategy>(strategy)).data();
}

// ---- profiles ---------------------------------------------------------------

dodgson_status dodgson_profile_parse(const char* text, size_t length, dodgson_profile** out) {
  if (!text || !out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new dodgson_profile{dodgson::parse_profile({text, length})}; });
}

dodgson_status dodgson_profile_generate(uint64_t voters, uint64_t alternatives, uint64_t seed,
                                        dodgson_profile** out) {
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new dodgson_profile{dodgson::generate_impartial_culture(voters, alternatives, seed)};
  });
}

void dodgson_profile_free(dodgson_profile* profile) { delete profile; }

dodgson_status dodgson_profile_serialize(const dodgson_profile* profile, char** out) {
  if (auto s = require(profile, "profile")) return s;
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(dodgson::serialize_profile(profile->value)); });
}

size_t dodgson_profile_voters(const dodgson_profile* profile) {
  return profile ? profile->value.voters() : 0;
}

size_t dodgson_profile_alternatives(const dodgson_profile* profile) {
  return profile ? profile->value.alternatives() : 0;
}

const char* dodgson_profile_name(const dodgson_profile* profile, size_t alternative) {
  if (!profile || alternative >= profile->value.alternatives()) return nullptr;
  return profile->value.names()[alternative].c_str();
}

dodgson_status dodgson_profile_find(const dodgson_profile* profile, const char* name,
                                    size_t* alternative) {
  if (auto s = require(profile, "profile")) return s;
  if (!name || !alternative) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] { *alternative = dodgson::index(profile->value.require(name)); });
}

dodgson_status dodgson_pairwise_tally(const dodgson_profile* profile, size_t a, size_t b,
                                      size_t* out) {
  if (auto s = require(profile, "profile")) return s;
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dodgson::pairwise_tally(profile->value, to_alt(profile, a), to_alt(profile, b));
  });
}

dodgson_status dodgson_is_condorcet_winner(const dodgson_profile* profile, size_t a, int* out) {
  if (auto s = require(profile, "profile")) return s;
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dodgson::is_condorcet_winner(profile->value, to_alt(profile, a)); });
}

dodgson_status dodgson_borda_count(const dodgson_profile* profile, size_t a, uint64_t* out) {
  if (auto s = require(profile, "profile")) return s;
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dodgson::borda_count(profile->value, to_alt(profile, a)); });
}

size_t dodgson_borda_order(const dodgson_profile* profile, size_t* out, size_t capacity) {
  if (!profile) return 0;
  const auto order = dodgson::borda_order(profile->value);
  for (size_t i = 0; i < order.size() && i < capacity && out; ++i) out[i] = dodgson::index(order[i]);
  return order.size();
}

// ---- scoring ----------------------------------------------------------------

dodgson_status dodgson_score_compute(const dodgson_profile* profile, size_t candidate,
                                     dodgson_scorer scorer, const dodgson_budget* budget,
                                     dodgson_score** out) {
  if (auto s = require(profile, "profile")) return s;
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new dodgson_score{dodgson::score(to_kind(scorer), profile->value,
                                            to_alt(profile, candidate), to_budget(budget))};
  });
}

void dodgson_score_free(dodgson_score* score) { delete score; }

dodgson_score_status dodgson_score_status_of(const dodgson_score* score) {
  return static_cast<dodgson_score_status>(score->value.status);
}

size_t dodgson_score_candidate(const dodgson_score* score) {
  return dodgson::index(score->value.candidate);
}

uint32_t dodgson_score_value(const dodgson_score* score) { return score->value.score; }

uint32_t dodgson_score_lower_bound(const dodgson_score* score) { return score->value.lower_bound; }

size_t dodgson_score_solution_count(const dodgson_score* score) {
  return score->value.minimal_solutions.size();
}

dodgson_status dodgson_score_solution(const dodgson_score* score, size_t index, uint32_t* counts,
                                      size_t capacity) {
  if (auto s = require(score, "score")) return s;
  const auto& sols = score->value.minimal_solutions;
  if (index >= sols.size()) return fail(DODGSON_ERR_ARGUMENT, "solution index out of range");
  const auto& c = sols[index].counts;
  if (!counts || capacity < c.size()) return fail(DODGSON_ERR_ARGUMENT, "buffer too small");
  std::copy(c.begin(), c.end(), counts);
  return DODGSON_OK;
}

void dodgson_score_counters(const dodgson_score* score, dodgson_counters* out) {
  if (score && out) copy_counters(score->value.stats, out);
}

// ---- tournaments ------------------------------------------------------------

dodgson_status dodgson_tournament_run(const dodgson_profile* profile, dodgson_strategy strategy,
                                      dodgson_scorer scorer, const dodgson_budget* budget,
                                      unsigned threads, dodgson_tournament** out) {
  if (auto s = require(profile, "profile")) return s;
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new dodgson_tournament{dodgson::run_tournament(profile->value, to_strategy(strategy),
                                                          to_budget(budget), to_kind(scorer),
                                                          dodgson::TournamentOptions{threads})};
  });
}

void dodgson_tournament_free(dodgson_tournament* outcome) { delete outcome; }

int dodgson_tournament_conclusive(const dodgson_tournament* outcome) {
  return outcome->value.conclusive;
}

int dodgson_tournament_winning_score(const dodgson_tournament* outcome, uint32_t* score) {
  if (!outcome->value.winning_score) return 0;
  if (score) *score = *outcome->value.winning_score;
  return 1;
}

uint32_t dodgson_tournament_certified_floor(const dodgson_tournament* outcome) {
  return outcome->value.certified_floor;
}

size_t dodgson_tournament_winner_count(const dodgson_tournament* outcome) {
  return outcome->value.winners.size();
}

size_t dodgson_tournament_winner(const dodgson_tournament* outcome, size_t i) {
  return dodgson::index(outcome->value.winners.at(i));
}

dodgson_status dodgson_tournament_candidate(const dodgson_tournament* outcome, size_t candidate,
                                            dodgson_candidate_status* status, uint32_t* value,
                                            dodgson_counters* counters) {
  if (auto s = require(outcome, "outcome")) return s;
  if (candidate >= outcome->value.per_candidate.size()) {
    return fail(DODGSON_ERR_ARGUMENT, "candidate index out of range");
  }
  const auto& r = outcome->value.per_candidate[candidate];
  if (status) *status = static_cast<dodgson_candidate_status>(r.status);
  if (value) *value = r.value;
  if (counters) copy_counters(r.stats, counters);
  return DODGSON_OK;
}

uint64_t dodgson_tournament_total_checks(const dodgson_tournament* outcome) {
  return outcome->value.total_checks();
}

// ---- analysis ---------------------------------------------------------------

dodgson_status dodgson_phi_basic(uint32_t n, uint32_t m, char** out) {
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(dodgson::analysis::phi_basic(n, m).str()); });
}

dodgson_status dodgson_c_worst(uint32_t n, uint32_t m, char** out) {
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(dodgson::analysis::c_worst(n, m).str()); });
}

dodgson_status dodgson_analysis_table(uint32_t n, uint32_t m_max, int pretty, char** out) {
  if (!out) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (n == 0) throw dodgson::UsageError("voters must be positive");
    const auto rows = dodgson::analysis::emit_table(n, 1, m_max);
    *out = copy_string(pretty ? dodgson::analysis::to_pretty(rows) : dodgson::analysis::to_csv(rows));
  });
}

// ---- benchmarking -----------------------------------------------------------

dodgson_status dodgson_bench_average(uint32_t n, uint32_t m, uint32_t runs, uint64_t seed_base,
                                     dodgson_bench_mode mode, const dodgson_scorer* scorers,
                                     size_t scorer_count, unsigned threads, char** csv) {
  if (!csv || (scorer_count && !scorers)) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    dodgson::bench::AverageConfig config;
    config.n = n;
    config.m = m;
    config.runs = runs;
    config.seed_base = seed_base;
    config.mode = to_mode(mode);
    config.threads = threads;
    config.scorers.clear();
    for (size_t i = 0; i < scorer_count; ++i) config.scorers.push_back(to_kind(scorers[i]));
    *csv = copy_string(dodgson::bench::to_csv(dodgson::bench::run_average_benchmark(config)));
  });
}

dodgson_status dodgson_bench_sweep(const dodgson_sweep_config* c, char** csv) {
  if (!c || !csv) return fail(DODGSON_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    dodgson::bench::SweepConfig config;
    config.window_ms = c->window_ms;
    config.repetitions = c->repetitions;
    config.scorer = to_kind(c->scorer);
    config.mode = to_mode(c->mode);
    config.odd_n_only = c->odd_n_only != 0;
    config.seed_base = c->seed_base;
    config.n_first = c->n_first;
    config.n_last = c->n_last;
    config.m_limit = c->m_limit;
    config.threads = c->threads;
    *csv = copy_string(dodgson::bench::to_csv(dodgson::bench::run_range_sweep(config)));
  });
}

}  // extern "C"
