// SPDX-License-Identifier: Apache-2.0
//
// Smart Caching and Iterative Cost Raise: both visit score layers 0, 1, 2, ...
// and stop after the first layer holding a Condorcet-winning vector. SC builds
// the whole layer before testing it; ICR tests each vector as the permutor
// produces it.

#include <algorithm>

#include "dodgson/error.hpp"
#include "dodgson/permutor.hpp"
#include "scorers_impl.hpp"

namespace dodgson::detail {

namespace {

class SmartCaching final : public LayeredSearch {
 public:
  SmartCaching(const PreferenceProfile& pp, Alternative candidate, std::uint64_t entry_cap)
      : LayeredSearch(pp, candidate), entry_cap_(entry_cap) {}

  std::uint32_t next_layer() const noexcept override { return layer_; }

  Step advance(const Deadline& deadline) override {
    const auto& bounds = checker_.positions();
    const std::size_t n = bounds.size();
    const std::uint64_t size = layer_size(layer_, bounds);
    if (size > entry_cap_) {
      throw SizeLimitError("SC layer " + std::to_string(layer_) + " holds " +
                           std::to_string(size) + " entries, above the cap of " +
                           std::to_string(entry_cap_));
    }

    std::vector<std::uint32_t> cache;
    cache.reserve(size * n);
    auto cursor = create_permutor(layer_, bounds);
    std::uint64_t built = 0;
    while (const SwapProfile* s = cursor.next()) {
      cache.insert(cache.end(), s->counts.begin(), s->counts.end());
      if ((++built & 4095) == 0 && expired(deadline)) return Step::TimedOut;
    }
    stats_.nodes_generated += built;
    stats_.peak_frontier = std::max(stats_.peak_frontier, built);

    for (std::uint64_t e = 0; e < built; ++e) {
      std::span<const std::uint32_t> counts(cache.data() + e * n, n);
      if (check(counts)) solutions_.push_back(SwapProfile{{counts.begin(), counts.end()}});
      if ((e & 4095) == 4095 && expired(deadline)) return Step::TimedOut;
    }
    return finish_layer();
  }

 private:
  Step finish_layer() {
    if (!solutions_.empty()) {
      solved_ = true;
      return Step::Solved;
    }
    verified_below_ = ++layer_;
    return Step::Continue;
  }

  std::uint64_t entry_cap_;
  std::uint32_t layer_ = 0;
};

class IterativeCostRaise final : public LayeredSearch {
 public:
  IterativeCostRaise(const PreferenceProfile& pp, Alternative candidate)
      : LayeredSearch(pp, candidate) {
    stats_.peak_frontier = 1;
  }

  std::uint32_t next_layer() const noexcept override { return layer_; }

  Step advance(const Deadline& deadline) override {
    auto cursor = create_permutor(layer_, checker_.positions());
    while (const SwapProfile* s = cursor.next()) {
      ++stats_.nodes_generated;
      if (check(s->counts)) solutions_.push_back(*s);
      if ((stats_.condorcet_checks & 4095) == 0 && expired(deadline)) return Step::TimedOut;
    }
    if (!solutions_.empty()) {
      solved_ = true;
      return Step::Solved;
    }
    verified_below_ = ++layer_;
    return Step::Continue;
  }

 private:
  std::uint32_t layer_ = 0;
};

}  // namespace

std::unique_ptr<LayeredSearch> make_sc(const PreferenceProfile& pp, Alternative candidate,
                                       std::uint64_t entry_cap) {
  return std::make_unique<SmartCaching>(pp, candidate, entry_cap);
}

std::unique_ptr<LayeredSearch> make_icr(const PreferenceProfile& pp, Alternative candidate) {
  return std::make_unique<IterativeCostRaise>(pp, candidate);
}

}  // namespace dodgson::detail
