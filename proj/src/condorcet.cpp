// SPDX-License-Identifier: Apache-2.0
#include "dodgson/condorcet.hpp"

namespace dodgson {

CondorcetChecker::CondorcetChecker(const PreferenceProfile& pp, Alternative candidate)
    : candidate_(candidate), positions_(position_table(pp, candidate)) {
  const std::size_t n = pp.voters();
  rival_count_ = pp.alternatives() - 1;
  rival_ranks_.reserve(rival_count_ * n);
  for (std::uint32_t b = 0; b < pp.alternatives(); ++b) {
    if (b == index(candidate)) continue;
    for (std::size_t v = 0; v < n; ++v) rival_ranks_.push_back(pp.rank(v, Alternative(b)));
  }
}

bool CondorcetChecker::wins(std::span<const std::uint32_t> counts) const noexcept {
  const std::size_t n = voters();
  const std::size_t need = majority();
  for (std::size_t r = 0; r < rival_count_; ++r) {
    const std::uint32_t* ranks = rival_ranks_.data() + r * n;
    std::size_t ahead = 0;
    for (std::size_t v = 0; v < n; ++v) {
      ahead += ranks[v] + counts[v] >= positions_.positions[v];
    }
    if (ahead < need) return false;
  }
  return true;
}

}  // namespace dodgson
