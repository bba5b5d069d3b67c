// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dodgson/profile.hpp"

namespace dodgson {

/// Enumerates every swap vector v with sum(v) == target and v[i] <= bounds[i],
/// in lexicographic order with voter 0 most significant. O(n) state, so a
/// consumer can stop at any point for free.
class CompositionCursor {
 public:
  CompositionCursor(std::uint64_t target, PositionTable bounds);

  /// Next composition, or nullptr once exhausted. The pointer stays valid
  /// until the following call.
  const SwapProfile* next();

  bool exhausted() const noexcept { return state_ == State::Exhausted; }
  std::uint64_t target() const noexcept { return target_; }

 private:
  enum class State { Fresh, Active, Exhausted };

  // Writes the lexicographically smallest fill of `amount` into [from, n).
  void fill_tail(std::size_t from, std::uint64_t amount);

  std::uint64_t target_;
  PositionTable bounds_;
  SwapProfile current_;
  State state_ = State::Fresh;
};

inline CompositionCursor create_permutor(std::uint64_t target, PositionTable bounds) {
  return CompositionCursor(target, std::move(bounds));
}

/// Number of compositions the cursor for (target, bounds) emits, by dynamic
/// programming. Saturates at UINT64_MAX.
std::uint64_t layer_size(std::uint64_t target, const PositionTable& bounds);

/// layer_size for every target 0..sum(bounds), saturating.
std::vector<std::uint64_t> layer_sizes(const PositionTable& bounds);

}  // namespace dodgson
