// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dodgson/profile.hpp"

namespace dodgson {

/// Work done by one scorer run.
struct InstrumentationCounters {
  std::uint64_t condorcet_checks = 0;  ///< Condorcet tests performed
  std::uint64_t nodes_generated = 0;   ///< swap profiles materialized
  std::uint64_t peak_frontier = 0;     ///< largest live state (frames, frontier or layer)
  double elapsed_ms = 0.0;

  InstrumentationCounters& operator+=(const InstrumentationCounters& o) noexcept {
    condorcet_checks += o.condorcet_checks;
    nodes_generated += o.nodes_generated;
    if (o.peak_frontier > peak_frontier) peak_frontier = o.peak_frontier;
    elapsed_ms += o.elapsed_ms;
    return *this;
  }
};

/// Tests whether a fixed candidate becomes the Condorcet winner after a swap
/// vector is applied, reading the original profile only.
///
/// Moving the candidate up by s swaps in ballot i puts it above rival b iff
/// rank_i(b) >= positions[i] - s.
class CondorcetChecker {
 public:
  CondorcetChecker(const PreferenceProfile& pp, Alternative candidate);

  bool wins(std::span<const std::uint32_t> counts) const noexcept;

  Alternative candidate() const noexcept { return candidate_; }
  const PositionTable& positions() const noexcept { return positions_; }
  std::size_t voters() const noexcept { return positions_.size(); }
  std::size_t rivals() const noexcept { return rival_count_; }
  /// Ranks of rival r (0..rivals()-1) in every ballot.
  std::span<const std::uint32_t> rival_ranks(std::size_t r) const noexcept {
    return {rival_ranks_.data() + r * voters(), voters()};
  }
  /// Ballots needed for a strict majority.
  std::size_t majority() const noexcept { return voters() / 2 + 1; }

 private:
  Alternative candidate_;
  PositionTable positions_;
  std::vector<std::uint32_t> rival_ranks_;
  std::size_t rival_count_ = 0;
};

}  // namespace dodgson
