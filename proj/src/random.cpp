// SPDX-License-Identifier: Apache-2.0
#include <numeric>

#include "dodgson/error.hpp"
#include "dodgson/profile.hpp"

namespace dodgson {

PreferenceProfile generate_impartial_culture(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0 || m == 0) throw UsageError("impartial culture needs n >= 1 and m >= 1");
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) names.push_back("A" + std::to_string(i));

  SplitMix64 rng(seed);
  std::vector<std::vector<Alternative>> ballots(n);
  for (auto& ballot : ballots) {
    ballot.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) ballot[i] = Alternative(i);
    for (std::size_t i = m - 1; i > 0; --i) {
      const std::size_t j = rng.next() % (i + 1);
      std::swap(ballot[i], ballot[j]);
    }
  }
  return PreferenceProfile(std::move(names), std::move(ballots));
}

}  // namespace dodgson
