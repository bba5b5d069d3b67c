// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "dodgson/condorcet.hpp"
#include "dodgson/profile.hpp"

namespace dodgson {

enum class ScorerKind { Baseline, Dfs, Ucs, Sc, Icr };

std::string_view to_string(ScorerKind kind) noexcept;
/// Accepts the lower-case names baseline, dfs, ucs, sc and icr.
std::optional<ScorerKind> parse_scorer(std::string_view name) noexcept;

/// True for the kinds that search in increasing score order and can therefore
/// stop at a score cap with a certified lower bound.
constexpr bool is_layered(ScorerKind kind) noexcept {
  return kind == ScorerKind::Ucs || kind == ScorerKind::Sc || kind == ScorerKind::Icr;
}

/// Best exact score published so far in a tournament. Only ever decreases.
class SharedIncumbent {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t load() const noexcept { return value_.load(std::memory_order_acquire); }

  /// Lowers the bound to `score` if that is an improvement.
  void offer(std::uint32_t score) noexcept {
    auto cur = value_.load(std::memory_order_relaxed);
    while (score < cur &&
           !value_.compare_exchange_weak(cur, score, std::memory_order_acq_rel)) {
    }
  }

 private:
  std::atomic<std::uint32_t> value_{kNone};
};

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

inline bool expired(const Deadline& d) noexcept { return d && Clock::now() >= *d; }

struct ScoreBudget {
  std::optional<std::int64_t> max_millis;
  /// Stop once the layer about to be searched scores strictly above this.
  /// Only honoured by the layered kinds.
  std::optional<std::uint32_t> score_cap;
  /// Read at every layer boundary in addition to score_cap.
  const SharedIncumbent* incumbent = nullptr;
  /// Largest number of entries Baseline or SC may materialize at once.
  std::uint64_t entry_cap = 100'000'000;
  /// DFS only: cut branches whose partial score exceeds the best found.
  bool dfs_prune = false;

  Deadline deadline_from(Clock::time_point start) const {
    if (!max_millis) return std::nullopt;
    return start + std::chrono::milliseconds(*max_millis);
  }
};

enum class ScoreStatus {
  Exact,        ///< score and minimal_solutions are final
  TimedOut,     ///< budget time ran out; lower_bound is certified
  CapExceeded,  ///< next layer exceeded the cap; lower_bound is that layer
};

struct ScoreResult {
  Alternative candidate{};
  ScoreStatus status = ScoreStatus::Exact;
  std::uint32_t score = 0;        ///< valid when status == Exact
  std::uint32_t lower_bound = 0;  ///< no solution scores below this; == score when exact
  std::vector<SwapProfile> minimal_solutions;  ///< sorted ascending
  InstrumentationCounters stats;

  bool exact() const noexcept { return status == ScoreStatus::Exact; }
};

/// Exact Dodgson score of `candidate` with every minimal swap vector.
/// Throws UsageError for an unknown candidate and SizeLimitError when Baseline
/// or SC would exceed budget.entry_cap.
ScoreResult score(ScorerKind kind, const PreferenceProfile& pp, Alternative candidate,
                  const ScoreBudget& budget = {});

/// Same, with an externally owned deadline (used by tournaments that share one
/// clock across candidates).
ScoreResult score(ScorerKind kind, const PreferenceProfile& pp, Alternative candidate,
                  const ScoreBudget& budget, const Deadline& deadline);

/// A search that can be advanced one score layer at a time. UCS, SC and ICR
/// implement it; tournaments interleave these across candidates.
class LayeredSearch {
 public:
  enum class Step { Continue, Solved, TimedOut };

  virtual ~LayeredSearch() = default;

  /// Score of the next layer advance() will process.
  virtual std::uint32_t next_layer() const noexcept = 0;
  /// Searches the whole of next_layer(). Returns Solved once that layer held
  /// at least one Condorcet-winning vector.
  virtual Step advance(const Deadline& deadline) = 0;

  /// Every layer below this is known to hold no solution.
  std::uint32_t verified_below() const noexcept { return verified_below_; }
  bool solved() const noexcept { return solved_; }
  Alternative candidate() const noexcept { return checker_.candidate(); }
  const InstrumentationCounters& stats() const noexcept { return stats_; }
  InstrumentationCounters& stats() noexcept { return stats_; }

  /// Moves the collected minimal solutions out (sorted). Valid after Solved.
  std::vector<SwapProfile> take_solutions();

 protected:
  LayeredSearch(const PreferenceProfile& pp, Alternative candidate) : checker_(pp, candidate) {}

  bool check(std::span<const std::uint32_t> counts) {
    ++stats_.condorcet_checks;
    return checker_.wins(counts);
  }

  CondorcetChecker checker_;
  InstrumentationCounters stats_;
  std::vector<SwapProfile> solutions_;
  std::uint32_t verified_below_ = 0;
  bool solved_ = false;
};

/// Throws UsageError for Baseline and DFS.
std::unique_ptr<LayeredSearch> make_layered_search(ScorerKind kind, const PreferenceProfile& pp,
                                                   Alternative candidate,
                                                   std::uint64_t entry_cap = 100'000'000);

/// Drives a layered search to completion under a score cap and deadline.
ScoreResult run_layered(LayeredSearch& search, const ScoreBudget& budget, const Deadline& deadline);

}  // namespace dodgson
