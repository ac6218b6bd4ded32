// Copyright 2026 The lcadag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "lcadag.hpp"

using namespace lcadag;

TEST(Bitset, SmallSetOperations) {
  Subset a = Subset::from_mask(5, 0b00110);
  Subset b = Subset::from_mask(5, 0b01100);
  EXPECT_EQ((a & b).to_mask(), 0b00100u);
  EXPECT_EQ((a | b).to_mask(), 0b01110u);
  EXPECT_EQ((a - b).to_mask(), 0b00010u);
  EXPECT_EQ(a.count(), 2u);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE((a & b).is_proper_subset_of(a));
  EXPECT_EQ(a.indices(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(Subset::full(5).to_mask(), 0b11111u);
  EXPECT_EQ(Subset::from_mask(3, 0xFF).to_mask(), 0b111u);
}

TEST(Bitset, WideSetsBeyondOneWord) {
  Subset a(130), b(130);
  a.set(0).set(64).set(129);
  b.set(64).set(100);
  EXPECT_EQ((a & b).indices(), (std::vector<std::size_t>{64}));
  EXPECT_EQ((a | b).count(), 4u);
  EXPECT_EQ(Subset::full(130).count(), 130u);
  a.reset(129);
  EXPECT_FALSE(a.test(129));
  EXPECT_TRUE((a & b).is_subset_of(a));
  std::vector<std::size_t> seen;
  (a | b).for_each([&](std::size_t i) { seen.push_back(i); });
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 64, 100}));
}

TEST(Bitset, OrderingIsTotalAndConsistentWithEquality) {
  std::set<Subset> s;
  for (std::uint64_t m = 0; m < 16; ++m) s.insert(Subset::from_mask(4, m));
  EXPECT_EQ(s.size(), 16u);
  EXPECT_EQ(Subset::from_mask(4, 3), Subset::from_mask(4, 3));
}

TEST(Overlap, NestedDisjointAndProperOverlap) {
  GroundSet g({"x", "y", "z"});
  EXPECT_TRUE(overlaps(g.subset({"x", "y"}), g.subset({"y", "z"})));
  EXPECT_FALSE(overlaps(g.subset({"x", "y"}), g.subset({"x", "y", "z"})));
  EXPECT_FALSE(overlaps(g.subset({"x"}), g.subset({"y"})));
}

static std::uint64_t choose(std::uint64_t n, std::uint64_t r) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

TEST(Combinatorics, CombinationCountsMatchBinomials) {
  for (std::size_t m = 0; m <= 8; ++m)
    for (std::size_t r = 0; r <= m; ++r) {
      std::uint64_t count = 0;
      for_each_combination(m, r, [&](auto) { ++count; return true; });
      EXPECT_EQ(count, choose(m, r)) << m << " choose " << r;
    }
}

TEST(Combinatorics, ColexOrderWithinASize) {
  std::vector<std::uint64_t> masks;
  for_each_subset(Subset::full(4), 2, 2, SizeOrder::ascending, [&](const Subset& s) {
    masks.push_back(s.to_mask());
    return true;
  });
  EXPECT_EQ(masks, (std::vector<std::uint64_t>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100}));
}

TEST(Combinatorics, SizeOrderAndEarlyStop) {
  std::vector<std::size_t> sizes;
  for_each_nonempty_subset(3, SizeOrder::descending, [&](const Subset& s) {
    sizes.push_back(s.count());
    return true;
  });
  EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 2, 2, 2, 1, 1, 1}));
  int calls = 0;
  EXPECT_FALSE(for_each_small_subset(5, 2, SizeOrder::ascending, [&](const Subset&) { return ++calls < 3; }));
  EXPECT_EQ(calls, 3);
}

TEST(Combinatorics, SubsetsOfASparseMask) {
  Subset within = Subset::from_mask(6, 0b101010);
  std::set<std::uint64_t> seen;
  for_each_subset(within, 1, 3, SizeOrder::ascending, [&](const Subset& s) {
    EXPECT_TRUE(s.is_subset_of(within));
    seen.insert(s.to_mask());
    return true;
  });
  EXPECT_EQ(seen.size(), 7u);
}
