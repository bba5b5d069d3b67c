// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <limits>

#include "scorers_impl.hpp"

namespace dodgson::detail {

namespace {

/// Depth = voter index, branch = swap count for that voter. Keeps per-rival
/// tallies incrementally so a leaf test costs O(m).
class DepthFirst {
 public:
  DepthFirst(const CondorcetChecker& checker, const ScoreBudget& budget, const Deadline& deadline,
             ScoreResult& out)
      : checker_(checker),
        pos_(checker.positions().positions),
        prune_(budget.dfs_prune),
        deadline_(deadline),
        out_(out),
        ahead_(checker.rivals(), 0),
        counts_(pos_.size(), 0) {}

  bool run() {
    descend(0, 0);
    return !timed_out_;
  }

  std::uint32_t best() const noexcept { return best_; }

 private:
  void descend(std::size_t voter, std::uint32_t partial) {
    if (timed_out_) return;
    out_.stats.peak_frontier = std::max<std::uint64_t>(out_.stats.peak_frontier, voter + 1);
    if (voter == pos_.size()) {
      leaf(partial);
      return;
    }
    for (std::uint32_t s = 0; s <= pos_[voter]; ++s) {
      if (prune_ && partial + s > best_) break;
      counts_[voter] = s;
      for (std::size_t r = 0; r < ahead_.size(); ++r) {
        ahead_[r] += checker_.rival_ranks(r)[voter] + s >= pos_[voter];
      }
      descend(voter + 1, partial + s);
      for (std::size_t r = 0; r < ahead_.size(); ++r) {
        ahead_[r] -= checker_.rival_ranks(r)[voter] + s >= pos_[voter];
      }
      if (timed_out_) return;
    }
    counts_[voter] = 0;
  }

  void leaf(std::uint32_t score) {
    ++out_.stats.nodes_generated;
    ++out_.stats.condorcet_checks;
    if ((out_.stats.condorcet_checks & 4095) == 0 && expired(deadline_)) {
      timed_out_ = true;
      return;
    }
    const std::size_t need = checker_.majority();
    for (auto a : ahead_) {
      if (a < need) return;
    }
    if (score < best_) {
      best_ = score;
      out_.minimal_solutions.clear();
    }
    if (score == best_) out_.minimal_solutions.push_back(SwapProfile{counts_});
  }

  const CondorcetChecker& checker_;
  const std::vector<std::uint32_t>& pos_;
  bool prune_;
  const Deadline& deadline_;
  ScoreResult& out_;
  std::vector<std::size_t> ahead_;
  std::vector<std::uint32_t> counts_;
  std::uint32_t best_ = std::numeric_limits<std::uint32_t>::max();
  bool timed_out_ = false;
};

}  // namespace

ScoreResult score_dfs(const PreferenceProfile& pp, Alternative candidate, const ScoreBudget& budget,
                      const Deadline& deadline) {
  const auto start = Clock::now();
  const CondorcetChecker checker(pp, candidate);
  ScoreResult result;
  result.candidate = candidate;

  DepthFirst dfs(checker, budget, deadline, result);
  if (dfs.run()) {
    result.status = ScoreStatus::Exact;
    result.score = result.lower_bound = dfs.best();
    std::sort(result.minimal_solutions.begin(), result.minimal_solutions.end());
  } else {
    result.status = ScoreStatus::TimedOut;
    result.lower_bound = 0;
    result.minimal_solutions.clear();
  }
  result.stats.elapsed_ms = millis_since(start);
  return result;
}

}  // namespace dodgson::detail
