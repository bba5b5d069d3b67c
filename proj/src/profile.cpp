// SPDX-License-Identifier: Apache-2.0
#include "dodgson/profile.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "dodgson/error.hpp"

namespace dodgson {

PreferenceProfile::PreferenceProfile(std::vector<std::string> alternatives,
                                     std::vector<std::vector<Alternative>> ballots)
    : names_(std::move(alternatives)), voters_(ballots.size()) {
  const std::size_t m = names_.size();
  if (m == 0) throw UsageError("profile needs at least one alternative");
  if (voters_ == 0) throw UsageError("profile needs at least one ballot");
  {
    std::vector<std::string_view> sorted(names_.begin(), names_.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw UsageError("duplicate alternative " + std::string(*dup));
  }

  ballots_.reserve(voters_ * m);
  ranks_.assign(voters_ * m, 0);
  std::vector<bool> seen(m);
  for (std::size_t v = 0; v < voters_; ++v) {
    const auto& b = ballots[v];
    if (b.size() != m) {
      throw UsageError("ballot " + std::to_string(v + 1) + " has " + std::to_string(b.size()) +
                       " entries, expected " + std::to_string(m));
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t r = 0; r < m; ++r) {
      const auto a = index(b[r]);
      if (a >= m || seen[a]) {
        throw UsageError("ballot " + std::to_string(v + 1) + " is not a permutation");
      }
      seen[a] = true;
      ballots_.push_back(b[r]);
      ranks_[v * m + a] = r;
    }
  }
}

std::optional<Alternative> PreferenceProfile::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return Alternative(static_cast<std::uint32_t>(it - names_.begin()));
}

Alternative PreferenceProfile::require(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw UsageError("unknown alternative " + std::string(name));
}

bool PreferenceProfile::same_ballots(const PreferenceProfile& other) const {
  if (voters() != other.voters() || alternatives() != other.alternatives()) return false;
  for (std::size_t v = 0; v < voters(); ++v) {
    auto mine = ballot(v);
    auto theirs = other.ballot(v);
    for (std::size_t r = 0; r < alternatives(); ++r) {
      if (name(mine[r]) != other.name(theirs[r])) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> parse_count(std::string_view tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

PreferenceProfile parse_profile(std::string_view text) {
  std::optional<std::size_t> n, m;
  std::vector<std::string> names;
  std::unordered_map<std::string_view, std::uint32_t> lookup;
  std::vector<std::vector<Alternative>> ballots;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!n) {
      if (tokens.size() != 2) throw FormatError(line_no, "header must be `n m`");
      n = parse_count(tokens[0]);
      m = parse_count(tokens[1]);
      if (!n || !m) throw FormatError(line_no, "header must hold two base-10 integers");
      if (*n == 0 || *m == 0) throw FormatError(line_no, "n and m must be positive");
      continue;
    }

    const std::size_t ballot_no = ballots.size() + 1;
    if (ballot_no > *n) {
      throw FormatError(line_no, "more than " + std::to_string(*n) + " ballots");
    }
    if (tokens.size() != *m) {
      throw FormatError(line_no, "ballot " + std::to_string(ballot_no) + " has " +
                                     std::to_string(tokens.size()) + " alternatives, expected " +
                                     std::to_string(*m));
    }
    if (ballot_no == 1) {
      for (auto tok : tokens) names.emplace_back(tok);
      for (std::uint32_t i = 0; i < names.size(); ++i) {
        if (!lookup.emplace(names[i], i).second) {
          throw FormatError(line_no, "duplicate alternative " + names[i]);
        }
      }
    }
    std::vector<Alternative> ballot;
    std::vector<bool> seen(*m);
    ballot.reserve(*m);
    for (auto tok : tokens) {
      auto it = lookup.find(tok);
      if (it == lookup.end() || seen[it->second]) {
        throw FormatError(line_no, "ballot " + std::to_string(ballot_no) + " is not a permutation");
      }
      seen[it->second] = true;
      ballot.push_back(Alternative(it->second));
    }
    ballots.push_back(std::move(ballot));
  }

  if (!n) throw FormatError(0, "missing header");
  if (ballots.size() != *n) {
    throw FormatError(line_no, "expected " + std::to_string(*n) + " ballots, found " +
                                   std::to_string(ballots.size()));
  }
  return PreferenceProfile(std::move(names), std::move(ballots));
}

std::string serialize_profile(const PreferenceProfile& pp) {
  std::string out = std::to_string(pp.voters()) + ' ' + std::to_string(pp.alternatives()) + '\n';
  for (std::size_t v = 0; v < pp.voters(); ++v) {
    bool first = true;
    for (auto a : pp.ballot(v)) {
      if (!first) out += ' ';
      out += pp.name(a);
      first = false;
    }
    out += '\n';
  }
  return out;
}

namespace {

void require_member(const PreferenceProfile& pp, Alternative a) {
  if (index(a) >= pp.alternatives()) {
    throw UsageError("unknown alternative #" + std::to_string(index(a)));
  }
}

}  // namespace

std::size_t pairwise_tally(const PreferenceProfile& pp, Alternative a, Alternative b) {
  require_member(pp, a);
  require_member(pp, b);
  if (a == b) throw UsageError("pairwise tally needs two distinct alternatives");
  std::size_t count = 0;
  for (std::size_t v = 0; v < pp.voters(); ++v) count += pp.rank(v, a) < pp.rank(v, b);
  return count;
}

bool is_condorcet_winner(const PreferenceProfile& pp, Alternative a) {
  require_member(pp, a);
  for (std::uint32_t b = 0; b < pp.alternatives(); ++b) {
    if (b == index(a)) continue;
    if (2 * pairwise_tally(pp, a, Alternative(b)) <= pp.voters()) return false;
  }
  return true;
}

PositionTable position_table(const PreferenceProfile& pp, Alternative a) {
  require_member(pp, a);
  PositionTable t;
  t.positions.reserve(pp.voters());
  for (std::size_t v = 0; v < pp.voters(); ++v) t.positions.push_back(pp.rank(v, a));
  return t;
}

PreferenceProfile apply_swaps(const PreferenceProfile& pp, Alternative a, const SwapProfile& s) {
  require_member(pp, a);
  if (s.counts.size() != pp.voters()) {
    throw UsageError("swap profile has " + std::to_string(s.counts.size()) + " entries, expected " +
                     std::to_string(pp.voters()));
  }
  std::vector<std::vector<Alternative>> ballots;
  ballots.reserve(pp.voters());
  for (std::size_t v = 0; v < pp.voters(); ++v) {
    auto src = pp.ballot(v);
    std::vector<Alternative> b(src.begin(), src.end());
    const std::uint32_t pos = pp.rank(v, a);
    if (s.counts[v] > pos) {
      throw BoundViolation("voter " + std::to_string(v + 1) + ": " + std::to_string(s.counts[v]) +
                           " swaps requested, candidate is at position " + std::to_string(pos));
    }
    // Rotate [pos - k, pos] right by one: the candidate lands k places higher.
    auto first = b.begin() + (pos - s.counts[v]);
    std::rotate(first, b.begin() + pos, b.begin() + pos + 1);
    ballots.push_back(std::move(b));
  }
  return PreferenceProfile(pp.names(), std::move(ballots));
}

std::uint64_t borda_count(const PreferenceProfile& pp, Alternative a) {
  require_member(pp, a);
  std::uint64_t total = 0;
  const std::uint64_t top = pp.alternatives() - 1;
  for (std::size_t v = 0; v < pp.voters(); ++v) total += top - pp.rank(v, a);
  return total;
}

}  // namespace dodgson
