// SPDX-License-Identifier: Apache-2.0
//
// dodgson: command-line front end over the C library.
//
// Exit codes: 0 ok, 2 inconclusive, 64 usage, 65 bad input, 70 size limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dodgson/dodgson.h"

namespace {

using nlohmann::json;

enum Exit : int { kOk = 0, kInconclusive = 2, kUsage = 64, kData = 65, kSoftware = 70 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(dodgson_status s) {
  switch (s) {
    case DODGSON_OK:
      return kOk;
    case DODGSON_ERR_ARGUMENT:
    case DODGSON_ERR_BOUND:
      return kUsage;
    case DODGSON_ERR_FORMAT:
      return kData;
    default:
      return kSoftware;
  }
}

void check(dodgson_status s) {
  if (s != DODGSON_OK) throw Failure{exit_for(s), dodgson_last_error()};
}

struct ProfileDeleter {
  void operator()(dodgson_profile* p) const { dodgson_profile_free(p); }
};
struct ScoreDeleter {
  void operator()(dodgson_score* p) const { dodgson_score_free(p); }
};
struct TournamentDeleter {
  void operator()(dodgson_tournament* p) const { dodgson_tournament_free(p); }
};
using Profile = std::unique_ptr<dodgson_profile, ProfileDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  dodgson_string_free(s);
  return out;
}

Profile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kData, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  dodgson_profile* p = nullptr;
  const auto s = dodgson_profile_parse(text.data(), text.size(), &p);
  if (s != DODGSON_OK) throw Failure{exit_for(s), path + ": " + dodgson_last_error()};
  return Profile(p);
}

dodgson_scorer scorer_named(const std::string& name) {
  dodgson_scorer k;
  check(dodgson_scorer_from_name(name.c_str(), &k));
  return k;
}

dodgson_budget budget_for(std::optional<std::int64_t> timeout) {
  dodgson_budget b;
  dodgson_budget_init(&b);
  if (timeout) b.max_millis = *timeout;
  return b;
}

json counters_json(const dodgson_counters& c) {
  return {{"condorcet_checks", c.condorcet_checks},
          {"nodes_generated", c.nodes_generated},
          {"peak_frontier", c.peak_frontier},
          {"elapsed_ms", c.elapsed_ms}};
}

std::string vector_text(const std::vector<std::uint32_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

// ---- score --------------------------------------------------------------

struct ScoreArgs {
  std::string file, candidate, scorer = "icr";
  std::optional<std::int64_t> timeout;
  bool json = false;
};

int cmd_score(const ScoreArgs& a) {
  auto pp = load(a.file);
  const auto kind = scorer_named(a.scorer);
  size_t cand = 0;
  check(dodgson_profile_find(pp.get(), a.candidate.c_str(), &cand));
  const auto budget = budget_for(a.timeout);

  dodgson_score* raw = nullptr;
  check(dodgson_score_compute(pp.get(), cand, kind, &budget, &raw));
  std::unique_ptr<dodgson_score, ScoreDeleter> sc(raw);

  const bool exact = dodgson_score_status_of(raw) == DODGSON_SCORE_EXACT;
  const std::size_t n = dodgson_profile_voters(pp.get());
  std::vector<std::vector<std::uint32_t>> solutions(dodgson_score_solution_count(raw),
                                                    std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    check(dodgson_score_solution(raw, i, solutions[i].data(), n));
  }
  dodgson_counters c;
  dodgson_score_counters(raw, &c);

  if (a.json) {
    json out = {{"candidate", a.candidate},
                {"scorer", a.scorer},
                {"status", exact ? "exact" : "timed_out"},
                {"lower_bound", dodgson_score_lower_bound(raw)},
                {"minimal_solutions", solutions},
                {"counters", counters_json(c)}};
    out["score"] = exact ? json(dodgson_score_value(raw)) : json(nullptr);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "candidate: " << a.candidate << '\n' << "scorer: " << a.scorer << '\n';
    if (exact) {
      std::cout << "score: " << dodgson_score_value(raw) << '\n'
                << "minimal solutions: " << solutions.size() << '\n';
      for (const auto& s : solutions) std::cout << "  " << vector_text(s) << '\n';
    } else {
      std::cout << "timed out: score >= " << dodgson_score_lower_bound(raw) << '\n';
    }
    std::cout << "condorcet_checks: " << c.condorcet_checks << '\n'
              << "nodes_generated: " << c.nodes_generated << '\n'
              << "peak_frontier: " << c.peak_frontier << '\n'
              << "elapsed_ms: " << c.elapsed_ms << '\n';
  }
  return exact ? kOk : kInconclusive;
}

// ---- winner -------------------------------------------------------------

struct WinnerArgs {
  std::string file, strategy = "concurrent-ordered", scorer = "icr";
  std::optional<std::int64_t> timeout;
  unsigned threads = 0;
  bool json = false;
};

const char* status_name(dodgson_candidate_status s) {
  switch (s) {
    case DODGSON_CANDIDATE_EXACT:
      return "exact";
    case DODGSON_CANDIDATE_LOWER_BOUND:
      return "lower_bound";
    default:
      return "pruned_at";
  }
}

int cmd_winner(const WinnerArgs& a) {
  auto pp = load(a.file);
  dodgson_strategy strategy;
  check(dodgson_strategy_from_name(a.strategy.c_str(), &strategy));
  const auto kind = scorer_named(a.scorer);
  const auto budget = budget_for(a.timeout);

  dodgson_tournament* raw = nullptr;
  check(dodgson_tournament_run(pp.get(), strategy, kind, &budget, a.threads, &raw));
  std::unique_ptr<dodgson_tournament, TournamentDeleter> t(raw);

  const bool conclusive = dodgson_tournament_conclusive(raw);
  std::uint32_t best = 0;
  const bool has_best = dodgson_tournament_winning_score(raw, &best);
  const std::uint32_t floor = dodgson_tournament_certified_floor(raw);
  std::vector<std::string> winners;
  for (std::size_t i = 0; i < dodgson_tournament_winner_count(raw); ++i) {
    winners.push_back(dodgson_profile_name(pp.get(), dodgson_tournament_winner(raw, i)));
  }

  json candidates = json::array();
  std::ostringstream table;
  for (std::size_t i = 0; i < dodgson_profile_alternatives(pp.get()); ++i) {
    dodgson_candidate_status st;
    std::uint32_t value = 0;
    dodgson_counters c;
    check(dodgson_tournament_candidate(raw, i, &st, &value, &c));
    const char* name = dodgson_profile_name(pp.get(), i);
    candidates.push_back({{"name", name},
                          {"status", status_name(st)},
                          {"value", value},
                          {"counters", counters_json(c)}});
    table << "  " << name << ": ";
    if (st == DODGSON_CANDIDATE_EXACT) table << "score " << value;
    else if (st == DODGSON_CANDIDATE_PRUNED_AT) table << "pruned at " << value;
    else table << "score >= " << value;
    table << " (" << c.condorcet_checks << " checks)\n";
  }

  if (a.json) {
    json out = {{"strategy", a.strategy},
                {"scorer", a.scorer},
                {"conclusive", conclusive},
                {"winners", winners},
                {"certified_floor", floor},
                {"candidates", candidates},
                {"total_checks", dodgson_tournament_total_checks(raw)}};
    out["winning_score"] = has_best ? json(best) : json(nullptr);
    std::cout << out.dump() << '\n';
  } else {
    if (conclusive) {
      std::cout << (winners.size() == 1 ? "winner: " : "winners: ");
      for (std::size_t i = 0; i < winners.size(); ++i) std::cout << (i ? ", " : "") << winners[i];
      std::cout << " (score " << best << ")\n";
    } else {
      std::cout << "inconclusive: no alternative better than " << floor << '\n';
    }
    std::cout << table.str() << "total_checks: " << dodgson_tournament_total_checks(raw) << '\n';
  }
  return conclusive ? kOk : kInconclusive;
}

// ---- gen / analyze / bench / sweep ---------------------------------------

int cmd_gen(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  dodgson_profile* raw = nullptr;
  check(dodgson_profile_generate(n, m, seed, &raw));
  Profile pp(raw);
  char* text = nullptr;
  check(dodgson_profile_serialize(raw, &text));
  std::cout << take(text);
  return kOk;
}

int cmd_analyze(std::uint32_t n, std::uint32_t m_max, bool pretty) {
  char* out = nullptr;
  check(dodgson_analysis_table(n, m_max, pretty, &out));
  std::cout << take(out);
  return kOk;
}

dodgson_bench_mode mode_named(const std::string& name) {
  if (name == "standard") return DODGSON_MODE_STANDARD;
  if (name == "threaded") return DODGSON_MODE_THREADED;
  throw Failure{kUsage, "unknown mode " + name + " (expected standard or threaded)"};
}

struct BenchArgs {
  std::uint32_t n = 8, m = 5, runs = 100;
  std::uint64_t seed = 1;
  std::string mode = "standard";
  std::vector<std::string> scorers{"baseline", "dfs", "ucs", "sc", "icr"};
  unsigned threads = 0;
};

int cmd_bench(const BenchArgs& a) {
  std::vector<dodgson_scorer> kinds;
  for (const auto& s : a.scorers) kinds.push_back(scorer_named(s));
  char* out = nullptr;
  check(dodgson_bench_average(a.n, a.m, a.runs, a.seed, mode_named(a.mode), kinds.data(),
                              kinds.size(), a.threads, &out));
  std::cout << take(out);
  return kOk;
}

struct SweepArgs {
  std::int64_t window = 100;
  std::uint32_t reps = 1;
  bool odd_n = false;
  std::string scorer = "icr", mode = "threaded";
  std::uint64_t seed = 1;
  std::uint32_t max_voters = 99, max_alts = 256;
  unsigned threads = 0;
};

int cmd_sweep(const SweepArgs& a) {
  dodgson_sweep_config cfg;
  dodgson_sweep_config_init(&cfg);
  cfg.window_ms = a.window;
  cfg.repetitions = a.reps;
  cfg.odd_n_only = a.odd_n;
  cfg.scorer = scorer_named(a.scorer);
  cfg.mode = mode_named(a.mode);
  cfg.seed_base = a.seed;
  cfg.n_last = a.max_voters;
  cfg.m_limit = a.max_alts;
  cfg.threads = a.threads;
  char* out = nullptr;
  check(dodgson_bench_sweep(&cfg, &out));
  std::cout << take(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dodgson scores and winners"};
  app.require_subcommand(1);

  ScoreArgs score;
  auto* s = app.add_subcommand("score", "Dodgson score of one alternative");
  s->add_option("file", score.file, "Profile file")->required();
  s->add_option("--candidate", score.candidate, "Alternative to score")->required();
  s->add_option("--scorer", score.scorer, "baseline, dfs, ucs, sc or icr");
  s->add_option("--timeout", score.timeout, "Time limit in milliseconds");
  s->add_flag("--json", score.json, "Single-line JSON output");

  WinnerArgs winner;
  auto* w = app.add_subcommand("winner", "Dodgson winner(s) of a profile");
  w->add_option("file", winner.file, "Profile file")->required();
  w->add_option("--strategy", winner.strategy, "full, ordered, concurrent or concurrent-ordered");
  w->add_option("--scorer", winner.scorer, "ucs, sc or icr (full also takes baseline and dfs)");
  w->add_option("--timeout", winner.timeout, "Time limit in milliseconds");
  w->add_option("--threads", winner.threads, "Worker threads (0: automatic)");
  w->add_flag("--json", winner.json, "Single-line JSON output");

  std::uint64_t gen_n = 0, gen_m = 0, gen_seed = 1;
  auto* g = app.add_subcommand("gen", "Random impartial-culture profile");
  g->add_option("--voters", gen_n, "Number of ballots")->required();
  g->add_option("--alts", gen_m, "Number of alternatives")->required();
  g->add_option("--seed", gen_seed, "Generator seed");

  std::uint32_t an_n = 5, an_m = 10;
  bool an_pretty = false;
  auto* an = app.add_subcommand("analyze", "Search-space size table");
  an->add_option("--voters", an_n, "Fixed number of voters");
  an->add_option("--alts-max", an_m, "Largest number of alternatives");
  an->add_flag("--pretty", an_pretty, "Aligned table instead of CSV");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Repeated-run timing statistics");
  b->add_option("--voters", bench.n, "Ballots per profile");
  b->add_option("--alts", bench.m, "Alternatives per profile");
  b->add_option("--runs", bench.runs, "Number of profiles");
  b->add_option("--seed", bench.seed, "Seed of the first profile");
  b->add_option("--mode", bench.mode, "standard or threaded");
  b->add_option("--scorers", bench.scorers, "Comma-separated scorer list")->delimiter(',');
  b->add_option("--threads", bench.threads, "Worker threads in threaded mode (0: automatic)");

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "Largest m solved inside a time window, per n");
  sw->add_option("--window", sweep.window, "Window in milliseconds");
  sw->add_option("--reps", sweep.reps, "Repetitions averaged per n");
  sw->add_flag("--odd-n", sweep.odd_n, "Only odd numbers of voters");
  sw->add_option("--scorer", sweep.scorer, "Scorer to sweep");
  sw->add_option("--mode", sweep.mode, "standard or threaded");
  sw->add_option("--seed", sweep.seed, "Seed base");
  sw->add_option("--max-voters", sweep.max_voters, "Largest n to try");
  sw->add_option("--max-alts", sweep.max_alts, "Largest m to try");
  sw->add_option("--threads", sweep.threads, "Worker threads (0: automatic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*s) return cmd_score(score);
    if (*w) return cmd_winner(winner);
    if (*g) return cmd_gen(gen_n, gen_m, gen_seed);
    if (*an) return cmd_analyze(an_n, an_m, an_pretty);
    if (*b) return cmd_bench(bench);
    if (*sw) return cmd_sweep(sweep);
  } catch (const Failure& f) {
    std::cerr << "dodgson: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "dodgson: " << e.what() << '\n';
    return kSoftware;
  }
  return kUsage;
}
