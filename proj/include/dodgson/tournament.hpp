// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dodgson/profile.hpp"
#include "dodgson/scorers.hpp"

namespace dodgson {

enum class TournamentStrategy {
  FullSequential,     ///< score every candidate exactly, declaration order
  OrderedSequential,  ///< Borda order, each search capped at the best score so far
  Concurrent,         ///< all searches advance together, layer by layer
  ConcurrentOrdered,  ///< as Concurrent, work dispatched in Borda order
};

std::string_view to_string(TournamentStrategy s) noexcept;
/// Accepts full, ordered, concurrent and concurrent-ordered.
std::optional<TournamentStrategy> parse_strategy(std::string_view name) noexcept;

constexpr bool prunes(TournamentStrategy s) noexcept { return s != TournamentStrategy::FullSequential; }

enum class CandidateStatus {
  Exact,       ///< value is the Dodgson score
  LowerBound,  ///< search timed out; score >= value
  PrunedAt,    ///< abandoned before searching layer `value`; score >= value
};

struct CandidateReport {
  Alternative candidate{};
  CandidateStatus status = CandidateStatus::Exact;
  std::uint32_t value = 0;
  InstrumentationCounters stats;
};

struct TournamentOutcome {
  /// Candidates with the minimum exact score, declaration order. When the run
  /// is inconclusive these are only the best found so far (possibly none).
  std::vector<Alternative> winners;
  std::optional<std::uint32_t> winning_score;
  /// One entry per alternative, declaration order.
  std::vector<CandidateReport> per_candidate;
  bool conclusive = false;
  /// No alternative scores below this.
  std::uint32_t certified_floor = 0;

  std::uint64_t total_checks() const noexcept;
};

struct TournamentOptions {
  /// Worker threads for the concurrent strategies; 0 means
  /// min(m, hardware concurrency).
  unsigned threads = 0;
};

/// Alternatives by descending Borda count, ties in declaration order.
std::vector<Alternative> borda_order(const PreferenceProfile& pp);

/// Determines the Dodgson winner set. Pruning strategies require a layered
/// scorer (UCS, SC, ICR) and throw UsageError otherwise. budget.max_millis
/// bounds the whole tournament.
TournamentOutcome run_tournament(const PreferenceProfile& pp, TournamentStrategy strategy,
                                 const ScoreBudget& budget, ScorerKind scorer,
                                 const TournamentOptions& options = {});

}  // namespace dodgson
