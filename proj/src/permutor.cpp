// SPDX-License-Identifier: Apache-2.0
#include "dodgson/permutor.hpp"

#include <algorithm>
#include <limits>

namespace dodgson {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t capacity(const PositionTable& bounds) noexcept {
  std::uint64_t total = 0;
  for (auto b : bounds.positions) total += b;
  return total;
}

}  // namespace

CompositionCursor::CompositionCursor(std::uint64_t target, PositionTable bounds)
    : target_(target), bounds_(std::move(bounds)) {
  current_.counts.assign(bounds_.size(), 0);
}

void CompositionCursor::fill_tail(std::size_t from, std::uint64_t amount) {
  for (std::size_t j = bounds_.size(); j-- > from;) {
    const auto c = static_cast<std::uint32_t>(std::min<std::uint64_t>(bounds_[j], amount));
    current_.counts[j] = c;
    amount -= c;
  }
}

const SwapProfile* CompositionCursor::next() {
  switch (state_) {
    case State::Exhausted:
      return nullptr;
    case State::Fresh:
      if (target_ > capacity(bounds_)) {
        state_ = State::Exhausted;
        return nullptr;
      }
      fill_tail(0, target_);
      state_ = State::Active;
      return &current_;
    case State::Active:
      break;
  }

  // Rightmost index that can take one more swap while the tail gives one up.
  const std::size_t n = bounds_.size();
  std::uint64_t suffix = 0;
  for (std::size_t i = n; i-- > 0;) {
    if (suffix >= 1 && current_.counts[i] < bounds_[i]) {
      ++current_.counts[i];
      fill_tail(i + 1, suffix - 1);
      return &current_;
    }
    suffix += current_.counts[i];
  }
  state_ = State::Exhausted;
  return nullptr;
}

std::vector<std::uint64_t> layer_sizes(const PositionTable& bounds) {
  // Coefficients of prod_i (1 + x + ... + x^{b_i}), via prefix sums.
  std::vector<std::uint64_t> poly{1};
  for (auto b : bounds.positions) {
    std::vector<std::uint64_t> next(poly.size() + b, 0);
    std::uint64_t window = 0;
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k < poly.size()) window = sat_add(window, poly[k]);
      if (k > b && k - b - 1 < poly.size() && window != kSaturated) window -= poly[k - b - 1];
      next[k] = window;
    }
    poly = std::move(next);
  }
  return poly;
}

std::uint64_t layer_size(std::uint64_t target, const PositionTable& bounds) {
  if (target > capacity(bounds)) return 0;
  return layer_sizes(bounds)[target];
}

}  // namespace dodgson
