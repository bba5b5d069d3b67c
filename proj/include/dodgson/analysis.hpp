// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dodgson::analysis {

using BigInt = boost::multiprecision::cpp_int;

/// Size of the full search space over all m candidates on the worst-case
/// profile: sum_{i=1..m} i^n.
BigInt phi_basic(std::uint32_t n, std::uint32_t m);

/// ceil(m!^(n/m + 1) * m). Exact when m divides n, otherwise evaluated in
/// 50-digit floating point and rounded up. A bound, not an exact count.
BigInt phi_base_case_bound(std::uint32_t n, std::uint32_t m);

/// UCS traversal bound over all candidates: sum_{i=1..m} i^ceil(n/2).
BigInt c_worst(std::uint32_t n, std::uint32_t m);

/// Per-candidate UCS traversal bound for a candidate at 1-based position i_x.
BigInt c_candidate(std::uint32_t n, std::uint32_t position_1based);

/// max(0, floor((n/m - 1) * sum_{i=1..floor(n/2)} i)).
std::uint64_t best_case_score_bound(std::uint32_t n, std::uint32_t m);

struct SpaceEstimate {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  BigInt phi;
  BigInt c;
  /// 100 * c / phi in tenths of a percent, rounded half up.
  std::uint64_t ratio_tenths = 0;

  /// "5.1" style, one decimal place.
  std::string ratio_string() const;
};

/// c * 1000 / phi rounded half up.
std::uint64_t ratio_tenths(const BigInt& c, const BigInt& phi);

/// One row per m in [m_first, m_last] at fixed n.
std::vector<SpaceEstimate> emit_table(std::uint32_t n, std::uint32_t m_first, std::uint32_t m_last);

/// `m,phi,c,ratio_percent` header plus one line per row.
std::string to_csv(const std::vector<SpaceEstimate>& rows);
/// Aligned text table with `%` suffixes.
std::string to_pretty(const std::vector<SpaceEstimate>& rows);

}  // namespace dodgson::analysis
