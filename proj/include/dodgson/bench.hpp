// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dodgson/scorers.hpp"
#include "dodgson/tournament.hpp"

namespace dodgson::bench {

enum class Mode { Standard, Threaded };

std::string_view to_string(Mode mode) noexcept;

struct Summary {
  double min = 0, median = 0, max = 0, mean = 0;
  double sigma = 0;  ///< population standard deviation
};

/// Order statistics, mean and population sigma of a non-empty sample.
Summary summarize(std::span<const double> sample);

struct RunStats {
  ScorerKind scorer{};
  Mode mode = Mode::Standard;
  std::uint32_t n = 0, m = 0;
  std::uint32_t runs = 0;
  Summary millis;
  double avg_calls = 0;  ///< mean Condorcet checks per run, summed over candidates/workers
  std::uint64_t seed_base = 0;
};

struct AverageConfig {
  std::uint32_t n = 8, m = 5;
  std::uint32_t runs = 100;
  std::uint64_t seed_base = 1;
  std::vector<ScorerKind> scorers{ScorerKind::Baseline, ScorerKind::Dfs, ScorerKind::Ucs,
                                  ScorerKind::Sc, ScorerKind::Icr};
  Mode mode = Mode::Standard;
  unsigned threads = 0;
};

/// Run r scores generate_impartial_culture(n, m, seed_base + r) with every
/// scorer. Standard mode resolves the full tournament sequentially; threaded
/// mode uses ConcurrentOrdered for the layered scorers and leaves Baseline and
/// DFS sequential.
std::vector<RunStats> run_average_benchmark(const AverageConfig& config);

/// The solve a single benchmark or sweep step performs.
TournamentOutcome solve_profile(const PreferenceProfile& pp, ScorerKind scorer, Mode mode,
                                const ScoreBudget& budget, unsigned threads = 0);

struct RangeRecord {
  std::uint32_t n = 0;
  double m_max = 0;  ///< average over repetitions; 0 when even m = 1 failed
  std::int64_t window_ms = 0;
  std::uint32_t repetitions = 0;
  bool capped = false;  ///< every repetition reached m_limit
  std::uint64_t seed_base = 0;
};

struct SweepConfig {
  std::int64_t window_ms = 100;
  std::uint32_t repetitions = 1;
  ScorerKind scorer = ScorerKind::Icr;
  Mode mode = Mode::Threaded;
  bool odd_n_only = true;
  std::uint64_t seed_base = 1;
  std::uint32_t n_first = 1;
  std::uint32_t n_last = 99;  ///< inclusive upper limit on n
  std::uint32_t m_limit = 256;  ///< stop growing m here
  unsigned threads = 0;
};

/// For each n, grows m from 1 while a full solve of
/// generate_impartial_culture(n, m, seed_base + rep) finishes inside the
/// window, and records the last solved m. Stops after the first n whose
/// averaged m_max is <= 4.
std::vector<RangeRecord> run_range_sweep(const SweepConfig& config);

std::string to_csv(std::span<const RunStats> stats);
std::string to_csv(std::span<const RangeRecord> records);

}  // namespace dodgson::bench
