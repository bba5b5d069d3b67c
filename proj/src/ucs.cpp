// SPDX-License-Identifier: Apache-2.0
//
// Uniform-cost search over swap vectors, cost = number of swaps.
//
// Duplicate paths are removed by canonical expansion: a node may only raise
// voters at or after the last voter it raised, so every vector has exactly one
// path. Voters with identical ballots are interchangeable, so among them the
// counts are kept non-increasing in voter order and each solution found is
// expanded to its full orbit at the end. A child is only queued when, with the
// voters before its last raised voter frozen, every rival can still be beaten.

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "scorers_impl.hpp"

namespace dodgson::detail {

namespace {

constexpr std::size_t kNoVoter = static_cast<std::size_t>(-1);

struct Node {
  std::vector<std::uint32_t> counts;
  std::uint32_t score = 0;
  std::uint32_t first_free = 0;  // voters below this are frozen
};

struct LaterFirst {
  bool operator()(const Node& a, const Node& b) const noexcept {
    if (a.score != b.score) return a.score > b.score;
    return a.counts > b.counts;
  }
};

class UniformCost final : public LayeredSearch {
 public:
  UniformCost(const PreferenceProfile& pp, Alternative candidate)
      : LayeredSearch(pp, candidate), pos_(checker_.positions().positions) {
    const std::size_t n = pos_.size();
    prev_in_group_.assign(n, kNoVoter);
    std::map<std::vector<Alternative>, std::size_t> last_seen;
    std::map<std::vector<Alternative>, std::size_t> group_of;
    for (std::size_t v = 0; v < n; ++v) {
      auto b = pp.ballot(v);
      std::vector<Alternative> key(b.begin(), b.end());
      auto [it, fresh] = last_seen.try_emplace(key, v);
      if (!fresh) {
        prev_in_group_[v] = it->second;
        it->second = v;
      }
      auto [g, new_group] = group_of.try_emplace(key, groups_.size());
      if (new_group) groups_.emplace_back();
      groups_[g->second].push_back(v);
    }
    reach_.resize(n);

    Node root;
    root.counts.assign(n, 0);
    frontier_.push(std::move(root));
    stats_.nodes_generated = 1;
    stats_.peak_frontier = 1;
  }

  std::uint32_t next_layer() const noexcept override {
    return frontier_.empty() ? verified_below_ : frontier_.top().score;
  }

  Step advance(const Deadline& deadline) override {
    if (frontier_.empty()) throw std::logic_error("uniform-cost frontier exhausted");
    const std::uint32_t layer = frontier_.top().score;
    verified_below_ = layer;
    std::vector<SwapProfile> found;
    while (!frontier_.empty() && frontier_.top().score == layer) {
      if ((stats_.condorcet_checks & 1023) == 1023 && expired(deadline)) return Step::TimedOut;
      Node node = frontier_.top();
      frontier_.pop();
      if (check(node.counts)) found.push_back(SwapProfile{node.counts});
      expand(node);
    }
    if (!found.empty()) {
      for (auto& canonical : found) add_orbit(canonical);
      solved_ = true;
      return Step::Solved;
    }
    verified_below_ = next_layer();
    return Step::Continue;
  }

 private:
  void expand(const Node& node) {
    const std::size_t n = pos_.size();
    for (std::size_t j = node.first_free; j < n; ++j) {
      if (node.counts[j] >= pos_[j]) continue;
      const std::size_t prev = prev_in_group_[j];
      if (prev != kNoVoter && node.counts[j] + 1 > node.counts[prev]) continue;
      Node child{node.counts, node.score + 1, static_cast<std::uint32_t>(j)};
      ++child.counts[j];
      if (!feasible(child)) continue;
      frontier_.push(std::move(child));
      ++stats_.nodes_generated;
      stats_.peak_frontier = std::max<std::uint64_t>(stats_.peak_frontier, frontier_.size());
    }
  }

  // Can some descendant (or the node itself) beat every rival?
  bool feasible(const Node& node) {
    const std::size_t n = pos_.size();
    for (std::size_t v = 0; v < n; ++v) {
      if (v < node.first_free) {
        reach_[v] = node.counts[v];
      } else {
        const std::size_t prev = prev_in_group_[v];
        reach_[v] = prev == kNoVoter ? pos_[v] : std::min(pos_[v], reach_[prev]);
      }
    }
    const std::size_t need = checker_.majority();
    for (std::size_t r = 0; r < checker_.rivals(); ++r) {
      auto ranks = checker_.rival_ranks(r);
      std::size_t possible = 0;
      for (std::size_t v = 0; v < n; ++v) {
        possible += ranks[v] + node.counts[v] >= pos_[v] ||
                    (v >= node.first_free && ranks[v] + reach_[v] >= pos_[v]);
      }
      if (possible < need) return false;
    }
    return true;
  }

  // All distinct rearrangements of the counts within each identical-ballot
  // group; each is a solution of the same score.
  void add_orbit(const SwapProfile& canonical) {
    SwapProfile work = canonical;
    permute_group(0, work);
  }

  void permute_group(std::size_t g, SwapProfile& work) {
    if (g == groups_.size()) {
      solutions_.push_back(work);
      return;
    }
    const auto& members = groups_[g];
    std::vector<std::uint32_t> values;
    values.reserve(members.size());
    for (auto v : members) values.push_back(work.counts[v]);
    const auto saved = values;
    std::sort(values.begin(), values.end());
    do {
      for (std::size_t i = 0; i < members.size(); ++i) work.counts[members[i]] = values[i];
      permute_group(g + 1, work);
    } while (std::next_permutation(values.begin(), values.end()));
    for (std::size_t i = 0; i < members.size(); ++i) work.counts[members[i]] = saved[i];
  }

  const std::vector<std::uint32_t>& pos_;
  std::vector<std::size_t> prev_in_group_;
  std::vector<std::vector<std::size_t>> groups_;
  std::vector<std::uint32_t> reach_;
  std::priority_queue<Node, std::vector<Node>, LaterFirst> frontier_;
};

}  // namespace

std::unique_ptr<LayeredSearch> make_ucs(const PreferenceProfile& pp, Alternative candidate) {
  return std::make_unique<UniformCost>(pp, candidate);
}

}  // namespace dodgson::detail
