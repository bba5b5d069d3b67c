// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "dodgson/permutor.hpp"
#include "oracle.hpp"

using namespace dodgson;

namespace {

std::vector<std::vector<std::uint32_t>> drain(std::uint64_t target, std::vector<std::uint32_t> b) {
  std::vector<std::vector<std::uint32_t>> out;
  auto cur = create_permutor(target, PositionTable{std::move(b)});
  while (const SwapProfile* s = cur.next()) out.push_back(s->counts);
  CHECK(cur.exhausted());
  CHECK(cur.next() == nullptr);
  return out;
}

using V = std::vector<std::vector<std::uint32_t>>;

}  // namespace

TEST_CASE("cursor examples") {
  CHECK(drain(0, {2, 2}) == V{{0, 0}});
  CHECK(drain(2, {2, 2}) == V{{0, 2}, {1, 1}, {2, 0}});
  CHECK(drain(2, {1, 1, 1}) == V{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(drain(5, {1, 1}).empty());
  CHECK(drain(0, {0, 0, 0}) == V{{0, 0, 0}});
  CHECK(drain(3, {0, 3, 0}) == V{{0, 3, 0}});
  CHECK(drain(1, {0}).empty());
}

TEST_CASE("layer_size examples") {
  CHECK(layer_size(0, PositionTable{{4, 1, 7}}) == 1);
  CHECK(layer_size(2, PositionTable{{2, 2}}) == 3);
  CHECK(layer_size(5, PositionTable{{1, 1}}) == 0);
  CHECK(layer_sizes(PositionTable{{2, 2}}) == std::vector<std::uint64_t>{1, 2, 3, 2, 1});
}

TEST_CASE("layer_size saturates instead of overflowing") {
  PositionTable wide{std::vector<std::uint32_t>(80, 1000)};
  CHECK(layer_size(40'000, wide) == UINT64_MAX);
  CHECK(layer_size(1, wide) == 80);
}

TEST_CASE("cursor is complete, ordered and bounded on every small instance") {
  // All bound vectors of length 1..4 with entries 0..3.
  for (std::size_t n = 1; n <= 4; ++n) {
    PositionTable three{std::vector<std::uint32_t>(n, 3)};
    for (const auto& bv : dodgson::testing::all_bounded_vectors(three)) {
      const PositionTable bounds{bv.counts};
      const auto everything = dodgson::testing::all_bounded_vectors(bounds);
      for (std::uint64_t target = 0; target <= 6; ++target) {
        std::vector<std::vector<std::uint32_t>> expected;
        for (const auto& v : everything) {
          if (v.total() == target) expected.push_back(v.counts);
        }
        // all_bounded_vectors runs in odometer order, which is lexicographic.
        const auto got = drain(target, bounds.positions);
        CAPTURE(target);
        CHECK(got == expected);
        CHECK(layer_size(target, bounds) == expected.size());
        CHECK(std::set(got.begin(), got.end()).size() == got.size());
      }
    }
  }
}

TEST_CASE("layer sizes sum to the whole space and are unimodal") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (std::uint32_t m = 1; m <= 6; ++m) {
      const PositionTable bounds{std::vector<std::uint32_t>(n, m - 1)};
      const auto sizes = layer_sizes(bounds);
      std::uint64_t sum = 0, product = 1;
      for (auto s : sizes) sum += s;
      for (std::uint32_t i = 0; i < n; ++i) product *= m;
      CHECK(sum == product);
      CHECK(sizes.size() == std::size_t(n) * (m - 1) + 1);

      std::size_t i = 1;
      while (i < sizes.size() && sizes[i] >= sizes[i - 1]) ++i;
      while (i < sizes.size() && sizes[i] <= sizes[i - 1]) ++i;
      CHECK(i == sizes.size());
    }
  }
}

TEST_CASE("mixed bounds sum to the product of bound+1") {
  const PositionTable bounds{{0, 3, 1, 4, 2}};
  std::uint64_t sum = 0;
  for (auto s : layer_sizes(bounds)) sum += s;
  CHECK(sum == 1 * 4 * 2 * 5 * 3);
}
