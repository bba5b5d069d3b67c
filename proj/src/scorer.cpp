// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <array>
#include <utility>

#include "dodgson/error.hpp"
#include "dodgson/scorers.hpp"
#include "scorers_impl.hpp"

namespace dodgson {

namespace {

constexpr std::array<std::pair<ScorerKind, std::string_view>, 5> kNames{{
    {ScorerKind::Baseline, "baseline"},
    {ScorerKind::Dfs, "dfs"},
    {ScorerKind::Ucs, "ucs"},
    {ScorerKind::Sc, "sc"},
    {ScorerKind::Icr, "icr"},
}};

void require_candidate(const PreferenceProfile& pp, Alternative candidate) {
  if (index(candidate) >= pp.alternatives()) {
    throw UsageError("unknown alternative #" + std::to_string(index(candidate)));
  }
}

}  // namespace

std::string_view to_string(ScorerKind kind) noexcept {
  for (auto [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<ScorerKind> parse_scorer(std::string_view name) noexcept {
  for (auto [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<SwapProfile> LayeredSearch::take_solutions() {
  std::sort(solutions_.begin(), solutions_.end());
  return std::exchange(solutions_, {});
}

std::unique_ptr<LayeredSearch> make_layered_search(ScorerKind kind, const PreferenceProfile& pp,
                                                   Alternative candidate, std::uint64_t entry_cap) {
  require_candidate(pp, candidate);
  switch (kind) {
    case ScorerKind::Ucs:
      return detail::make_ucs(pp, candidate);
    case ScorerKind::Sc:
      return detail::make_sc(pp, candidate, entry_cap);
    case ScorerKind::Icr:
      return detail::make_icr(pp, candidate);
    default:
      throw UsageError(std::string(to_string(kind)) + " does not search layer by layer");
  }
}

ScoreResult run_layered(LayeredSearch& search, const ScoreBudget& budget, const Deadline& deadline) {
  const auto start = Clock::now();
  ScoreResult result;
  result.candidate = search.candidate();

  for (;;) {
    std::uint32_t cap = budget.score_cap.value_or(SharedIncumbent::kNone);
    if (budget.incumbent) cap = std::min(cap, budget.incumbent->load());
    const std::uint32_t layer = search.next_layer();
    if (layer > cap) {
      result.status = ScoreStatus::CapExceeded;
      result.lower_bound = layer;
      break;
    }
    const auto step = search.advance(deadline);
    if (step == LayeredSearch::Step::Solved) {
      result.status = ScoreStatus::Exact;
      result.score = result.lower_bound = layer;
      result.minimal_solutions = search.take_solutions();
      break;
    }
    if (step == LayeredSearch::Step::TimedOut) {
      result.status = ScoreStatus::TimedOut;
      result.lower_bound = search.verified_below();
      break;
    }
  }
  result.stats = search.stats();
  result.stats.elapsed_ms = detail::millis_since(start);
  return result;
}

ScoreResult score(ScorerKind kind, const PreferenceProfile& pp, Alternative candidate,
                  const ScoreBudget& budget, const Deadline& deadline) {
  require_candidate(pp, candidate);
  switch (kind) {
    case ScorerKind::Baseline:
      return detail::score_baseline(pp, candidate, budget, deadline);
    case ScorerKind::Dfs:
      return detail::score_dfs(pp, candidate, budget, deadline);
    default: {
      auto search = make_layered_search(kind, pp, candidate, budget.entry_cap);
      return run_layered(*search, budget, deadline);
    }
  }
}

ScoreResult score(ScorerKind kind, const PreferenceProfile& pp, Alternative candidate,
                  const ScoreBudget& budget) {
  return score(kind, pp, candidate, budget, budget.deadline_from(Clock::now()));
}

}  // namespace dodgson
