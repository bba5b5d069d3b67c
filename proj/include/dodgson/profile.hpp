// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dodgson {

/// Index of an alternative in its profile's declaration order.
enum class Alternative : std::uint32_t {};

constexpr std::uint32_t index(Alternative a) noexcept { return static_cast<std::uint32_t>(a); }

/// Per-voter upward swap counts applied to one candidate.
struct SwapProfile {
  std::vector<std::uint32_t> counts;

  std::uint64_t total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  }
  friend auto operator<=>(const SwapProfile&, const SwapProfile&) = default;
};

/// positions[i] is the 0-based rank of the examined candidate in ballot i.
/// It is also the largest admissible swap count for voter i.
struct PositionTable {
  std::vector<std::uint32_t> positions;

  std::size_t size() const noexcept { return positions.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return positions[i]; }
  friend bool operator==(const PositionTable&, const PositionTable&) = default;
};

/// n strict total orders over m named alternatives. Immutable once built.
class PreferenceProfile {
 public:
  /// Ballots hold alternative indices, best first. Throws UsageError when an
  /// invariant is broken (duplicate names, non-permutation ballots, n or m zero).
  PreferenceProfile(std::vector<std::string> alternatives,
                    std::vector<std::vector<Alternative>> ballots);

  std::size_t voters() const noexcept { return voters_; }
  std::size_t alternatives() const noexcept { return names_.size(); }

  const std::string& name(Alternative a) const { return names_.at(index(a)); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Alternative> find(std::string_view name) const;
  /// Like find() but throws UsageError naming the missing alternative.
  Alternative require(std::string_view name) const;

  std::span<const Alternative> ballot(std::size_t voter) const {
    return {ballots_.data() + voter * alternatives(), alternatives()};
  }
  /// 0-based rank of `a` in ballot `voter`.
  std::uint32_t rank(std::size_t voter, Alternative a) const noexcept {
    return ranks_[voter * alternatives() + index(a)];
  }

  /// Same ballots, compared by alternative names so that profiles with a
  /// different declaration order still compare equal.
  bool same_ballots(const PreferenceProfile& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<Alternative> ballots_;  // voters_ x m, row-major
  std::vector<std::uint32_t> ranks_;  // voters_ x m, rank of each alternative
  std::size_t voters_ = 0;
};

/// Parses the text profile format: a `n m` header followed by n ballots of m
/// names each. `#` comment lines and blank lines are skipped. Alternatives are
/// declared in the order of the first ballot. Throws FormatError.
PreferenceProfile parse_profile(std::string_view text);

/// Inverse of parse_profile (without comments): header, then one ballot per
/// line with single spaces and a trailing newline.
std::string serialize_profile(const PreferenceProfile& pp);

/// Number of ballots ranking `a` strictly above `b`.
std::size_t pairwise_tally(const PreferenceProfile& pp, Alternative a, Alternative b);

/// True iff `a` beats every other alternative by strict majority.
bool is_condorcet_winner(const PreferenceProfile& pp, Alternative a);

PositionTable position_table(const PreferenceProfile& pp, Alternative a);

/// Moves `a` up by s.counts[i] adjacent swaps in ballot i. Throws
/// BoundViolation when a count exceeds the candidate's position, UsageError
/// when the vector length differs from n.
PreferenceProfile apply_swaps(const PreferenceProfile& pp, Alternative a, const SwapProfile& s);

/// Sum over ballots of the number of alternatives ranked below `a`.
std::uint64_t borda_count(const PreferenceProfile& pp, Alternative a);

/// n independent uniform permutations of A1..Am, a pure function of
/// (n, m, seed). Each ballot starts from A1..Am and is Fisher-Yates shuffled
/// with SplitMix64 draws reduced modulo (i+1).
PreferenceProfile generate_impartial_culture(std::size_t n, std::size_t m, std::uint64_t seed);

/// SplitMix64 generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace dodgson
