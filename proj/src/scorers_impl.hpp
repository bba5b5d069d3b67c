// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dodgson/scorers.hpp"

namespace dodgson::detail {

ScoreResult score_baseline(const PreferenceProfile& pp, Alternative candidate,
                           const ScoreBudget& budget, const Deadline& deadline);

ScoreResult score_dfs(const PreferenceProfile& pp, Alternative candidate, const ScoreBudget& budget,
                      const Deadline& deadline);

std::unique_ptr<LayeredSearch> make_ucs(const PreferenceProfile& pp, Alternative candidate);
std::unique_ptr<LayeredSearch> make_sc(const PreferenceProfile& pp, Alternative candidate,
                                       std::uint64_t entry_cap);
std::unique_ptr<LayeredSearch> make_icr(const PreferenceProfile& pp, Alternative candidate);

inline double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace dodgson::detail
