// SPDX-License-Identifier: Apache-2.0
#include "dodgson/analysis.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <iomanip>
#include <sstream>

#include "dodgson/error.hpp"

namespace dodgson::analysis {

namespace {

BigInt power_sum(std::uint32_t exponent, std::uint32_t m) {
  BigInt total = 0;
  for (std::uint32_t i = 1; i <= m; ++i) total += boost::multiprecision::pow(BigInt(i), exponent);
  return total;
}

void require_sizes(std::uint32_t n, std::uint32_t m) {
  if (n == 0 || m == 0) throw UsageError("n and m must be positive");
}

}  // namespace

BigInt phi_basic(std::uint32_t n, std::uint32_t m) {
  require_sizes(n, m);
  return power_sum(n, m);
}

BigInt c_worst(std::uint32_t n, std::uint32_t m) {
  require_sizes(n, m);
  return power_sum((n + 1) / 2, m);
}

BigInt c_candidate(std::uint32_t n, std::uint32_t position_1based) {
  require_sizes(n, position_1based);
  return boost::multiprecision::pow(BigInt(position_1based), (n + 1) / 2);
}

BigInt phi_base_case_bound(std::uint32_t n, std::uint32_t m) {
  require_sizes(n, m);
  BigInt factorial = 1;
  for (std::uint32_t i = 2; i <= m; ++i) factorial *= i;
  if (n % m == 0) return boost::multiprecision::pow(factorial, n / m + 1) * m;

  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float exponent = Float(n) / m + 1;
  const Float value = boost::multiprecision::pow(Float(factorial), exponent) * m;
  return BigInt(boost::multiprecision::ceil(value));
}

std::uint64_t best_case_score_bound(std::uint32_t n, std::uint32_t m) {
  require_sizes(n, m);
  if (n <= m) return 0;
  const std::uint64_t half = n / 2;
  const std::uint64_t triangle = half * (half + 1) / 2;
  // (n/m - 1) * triangle == (n - m) * triangle / m
  return (std::uint64_t{n} - m) * triangle / m;
}

std::uint64_t ratio_tenths(const BigInt& c, const BigInt& phi) {
  const BigInt scaled = (c * 2000 + phi) / (phi * 2);
  return scaled.convert_to<std::uint64_t>();
}

std::string SpaceEstimate::ratio_string() const {
  return std::to_string(ratio_tenths / 10) + '.' + std::to_string(ratio_tenths % 10);
}

std::vector<SpaceEstimate> emit_table(std::uint32_t n, std::uint32_t m_first, std::uint32_t m_last) {
  if (m_first == 0 || m_first > m_last) throw UsageError("invalid alternative range");
  std::vector<SpaceEstimate> rows;
  for (std::uint32_t m = m_first; m <= m_last; ++m) {
    SpaceEstimate row;
    row.n = n;
    row.m = m;
    row.phi = phi_basic(n, m);
    row.c = c_worst(n, m);
    row.ratio_tenths = ratio_tenths(row.c, row.phi);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<SpaceEstimate>& rows) {
  std::ostringstream out;
  out << "m,phi,c,ratio_percent\n";
  for (const auto& r : rows) out << r.m << ',' << r.phi << ',' << r.c << ',' << r.ratio_string() << '\n';
  return out.str();
}

std::string to_pretty(const std::vector<SpaceEstimate>& rows) {
  std::ostringstream out;
  out << std::setw(4) << "m" << std::setw(14) << "phi" << std::setw(12) << "c" << std::setw(10)
      << "c/phi" << '\n';
  for (const auto& r : rows) {
    out << std::setw(4) << r.m << std::setw(14) << r.phi.str() << std::setw(12) << r.c.str()
        << std::setw(9) << r.ratio_string() << "%\n";
  }
  return out.str();
}

}  // namespace dodgson::analysis
