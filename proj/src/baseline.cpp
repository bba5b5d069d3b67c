// SPDX-License-Identifier: Apache-2.0
//
// Baseline scorer: materialize the whole bounded swap space with the score of
// every entry, then scan it for Condorcet winners in a second pass.

#include <limits>

#include "dodgson/error.hpp"
#include "scorers_impl.hpp"

namespace dodgson::detail {

namespace {

struct Entry {
  std::uint64_t code;  // mixed-radix swap vector, voter 0 most significant
  std::uint32_t score;
};

constexpr std::uint64_t kTick = 1 << 16;

}  // namespace

ScoreResult score_baseline(const PreferenceProfile& pp, Alternative candidate,
                           const ScoreBudget& budget, const Deadline& deadline) {
  const auto start = Clock::now();
  const CondorcetChecker checker(pp, candidate);
  const auto& pos = checker.positions().positions;
  const std::size_t n = pos.size();

  ScoreResult result;
  result.candidate = candidate;

  std::uint64_t space = 1;
  for (auto p : pos) {
    if (space > budget.entry_cap / (std::uint64_t{p} + 1)) {
      throw SizeLimitError("baseline search space exceeds the entry cap of " +
                           std::to_string(budget.entry_cap));
    }
    space *= std::uint64_t{p} + 1;
  }
  if (space > budget.entry_cap) {
    throw SizeLimitError("baseline search space of " + std::to_string(space) +
                         " entries exceeds the entry cap of " + std::to_string(budget.entry_cap));
  }

  auto finish = [&](ScoreStatus status) {
    result.status = status;
    result.stats.elapsed_ms = millis_since(start);
    return result;
  };

  // First pass: odometer over all vectors v <= pos.
  std::vector<Entry> table;
  table.reserve(space);
  std::vector<std::uint32_t> counts(n, 0);
  std::uint32_t sum = 0;
  for (std::uint64_t code = 0; code < space; ++code) {
    table.push_back({code, sum});
    for (std::size_t i = n; i-- > 0;) {
      if (counts[i] < pos[i]) {
        ++counts[i];
        ++sum;
        break;
      }
      sum -= counts[i];
      counts[i] = 0;
    }
    if (code % kTick == kTick - 1 && expired(deadline)) {
      result.stats.nodes_generated = table.size();
      return finish(ScoreStatus::TimedOut);
    }
  }
  result.stats.nodes_generated = space;
  result.stats.peak_frontier = space;

  // Second pass: test every stored profile.
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint64_t> winners;
  for (const auto& e : table) {
    std::uint64_t rest = e.code;
    for (std::size_t i = n; i-- > 0;) {
      counts[i] = static_cast<std::uint32_t>(rest % (pos[i] + 1));
      rest /= pos[i] + 1;
    }
    ++result.stats.condorcet_checks;
    if (checker.wins(counts)) {
      if (e.score < best) {
        best = e.score;
        winners.clear();
      }
      if (e.score == best) winners.push_back(e.code);
    }
    if (result.stats.condorcet_checks % kTick == 0 && expired(deadline)) {
      return finish(ScoreStatus::TimedOut);
    }
  }

  result.score = result.lower_bound = best;
  for (auto code : winners) {
    SwapProfile s;
    s.counts.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
      s.counts[i] = static_cast<std::uint32_t>(code % (pos[i] + 1));
      code /= pos[i] + 1;
    }
    result.minimal_solutions.push_back(std::move(s));
  }
  return finish(ScoreStatus::Exact);
}

}  // namespace dodgson::detail
