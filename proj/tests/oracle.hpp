// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference used by the tests. It only relies on apply_swaps and
// is_condorcet_winner on real profiles, never on the scorers' shortcuts.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "dodgson/profile.hpp"

namespace dodgson::testing {

struct OracleScore {
  std::uint32_t score = std::numeric_limits<std::uint32_t>::max();
  std::vector<SwapProfile> solutions;  // sorted
};

/// All vectors v <= bounds, in odometer order.
inline std::vector<SwapProfile> all_bounded_vectors(const PositionTable& bounds) {
  std::vector<SwapProfile> out;
  SwapProfile v;
  v.counts.assign(bounds.size(), 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = bounds.size();
    while (i > 0) {
      --i;
      if (v.counts[i] < bounds[i]) {
        ++v.counts[i];
        break;
      }
      v.counts[i] = 0;
      if (i == 0) return out;
    }
    if (bounds.size() == 0) return out;
  }
}

/// Visits every bounded vector in increasing-sum order and stops after the
/// first sum layer that contains a Condorcet-winning edit.
inline OracleScore brute_force_score(const PreferenceProfile& pp, Alternative a) {
  const auto bounds = position_table(pp, a);
  auto all = all_bounded_vectors(bounds);
  std::stable_sort(all.begin(), all.end(),
                   [](const SwapProfile& x, const SwapProfile& y) { return x.total() < y.total(); });
  OracleScore out;
  for (const auto& v : all) {
    if (v.total() > out.score) break;
    if (is_condorcet_winner(apply_swaps(pp, a, v), a)) {
      out.score = static_cast<std::uint32_t>(v.total());
      out.solutions.push_back(v);
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

/// Whether any vector with sum < limit makes `a` win.
inline bool any_solution_below(const PreferenceProfile& pp, Alternative a, std::uint64_t limit) {
  for (const auto& v : all_bounded_vectors(position_table(pp, a))) {
    if (v.total() < limit && is_condorcet_winner(apply_swaps(pp, a, v), a)) return true;
  }
  return false;
}

/// n identical ballots A1 > A2 > ... > Am.
inline PreferenceProfile unanimous_profile(std::size_t n, std::size_t m) {
  std::vector<std::string> names;
  std::vector<Alternative> ballot;
  for (std::uint32_t i = 0; i < m; ++i) {
    names.push_back("A" + std::to_string(i + 1));
    ballot.push_back(Alternative(i));
  }
  return PreferenceProfile(names, std::vector<std::vector<Alternative>>(n, ballot));
}

/// Voter i ranks the alternatives rotated left by i (a cyclic Latin square when n == m).
inline PreferenceProfile cyclic_profile(std::size_t n, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("A" + std::to_string(i + 1));
  std::vector<std::vector<Alternative>> ballots(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t r = 0; r < m; ++r) ballots[v].push_back(Alternative((v + r) % m));
  }
  return PreferenceProfile(names, ballots);
}

inline PreferenceProfile sample_profile() {
  return parse_profile("3 3\nB A C\nB A C\nA B C\n");
}

}  // namespace dodgson::testing
