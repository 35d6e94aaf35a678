// Copyright 2026 The stablelab Authors
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

#include "stablelab/market/stability.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "stablelab/errors.hpp"
#include "stablelab/market/random_market.hpp"
#include "support/helpers.hpp"

namespace stablelab {
namespace {

using ::stablelab::testing::MakeMarket;
using ::stablelab::testing::ToSpouses;

TEST(PrefersTest, PrecedenceOnList) {
  PreferenceProfile p(2, {{2, 1}, {1, 2}});
  EXPECT_TRUE(Prefers(p, 1, 2, 1));
  EXPECT_FALSE(Prefers(p, 1, 1, 2));
  EXPECT_FALSE(WeaklyPrefers(p, 1, 1, 2));
  EXPECT_TRUE(WeaklyPrefers(p, 1, 1, 1));
}

TEST(PrefersTest, ListedBeatsUnlisted) {
  PreferenceProfile p(3, {{3}, {}, {}});
  EXPECT_TRUE(Prefers(p, 1, 3, 1));
  EXPECT_FALSE(Prefers(p, 1, 1, 2));
  EXPECT_FALSE(Prefers(p, 1, 1, 3));
  EXPECT_TRUE(WeaklyPrefers(p, 1, 3, 3));
}

TEST(PrefersTest, OutOfRangeIsDomainError) {
  PreferenceProfile p(2, {{1, 2}, {2, 1}});
  EXPECT_THROW(Prefers(p, 3, 1, 2), DomainError);
  EXPECT_THROW(Prefers(p, 1, 0, 2), DomainError);
  EXPECT_THROW(WeaklyPrefers(p, 1, 5, 5), DomainError);
}

TEST(PreferenceProfileTest, RejectsMalformedLists) {
  EXPECT_THROW(PreferenceProfile(2, {{1, 1}, {}}), DomainError);
  EXPECT_THROW(PreferenceProfile(2, {{3}, {}}), DomainError);
  EXPECT_THROW(PreferenceProfile(2, {{1}}), DomainError);
  EXPECT_THROW(MakeMarket(ListModel::kFull, {{1}, {1, 2}}, {{1, 2}, {2, 1}}),
               DomainError);
}

TEST(MarriageTest, RejectsNonInjective) {
  EXPECT_THROW(Marriage(2, {{1, 1}, {2, 1}}), DomainError);
  EXPECT_THROW(Marriage(2, {{1, 1}, {1, 2}}), DomainError);
  EXPECT_THROW(Marriage(2, {{1, 3}}), DomainError);
  Marriage mu(3, {{2, 3}});
  EXPECT_FALSE(mu.is_perfect());
  EXPECT_EQ(mu.wife(3), 2);
  EXPECT_EQ(mu.husband(1), std::nullopt);
}

TEST(BlockingPairTest, MutualTopChoicesHaveNoBlockingPair) {
  const auto market = MakeMarket(ListModel::kFull, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}},
                                 {{1, 3, 2}, {2, 1, 3}, {3, 2, 1}});
  const auto mu = Marriage::Identity(3);
  for (int w = 1; w <= 3; ++w) {
    for (int m = 1; m <= 3; ++m) EXPECT_FALSE(IsBlockingPair(market, mu, w, m));
  }
  EXPECT_TRUE(IsStable(market, mu));
  EXPECT_TRUE(BlockingPairs(market, mu).empty());
}

TEST(BlockingPairTest, TwoByTwoSingleBlockingPair) {
  // w1 ranks m2 first, m2 ranks w1 first.
  const auto market =
      MakeMarket(ListModel::kFull, {{2, 1}, {2, 1}}, {{1, 2}, {1, 2}});
  const auto mu = Marriage::Identity(2);
  EXPECT_TRUE(IsBlockingPair(market, mu, 1, 2));
  // Frozen from naive::BlockingPairs.
  const auto expected = naive::BlockingPairs(market.women().lists(),
                                             market.men().lists(), ToSpouses(mu));
  ASSERT_EQ(expected, (std::vector<Couple>{{1, 2}}));
  EXPECT_EQ(BlockingPairs(market, mu), expected);
  EXPECT_FALSE(IsStable(market, mu));
}

TEST(BlockingPairTest, EmptyListNeverBlocks) {
  const auto market =
      MakeMarket(ListModel::kPartial, {{}, {1}}, {{1, 2}, {2}});
  const Marriage single(2);
  EXPECT_FALSE(IsBlockingPair(market, single, 1, 1));
  EXPECT_FALSE(IsBlockingPair(market, single, 1, 2));
}

TEST(BlockingPairTest, UnmarriedPrefersAnyListedCandidate) {
  const auto market = MakeMarket(ListModel::kPartial, {{1}, {}}, {{1}, {}});
  EXPECT_TRUE(IsBlockingPair(market, Marriage(2), 1, 1));
  EXPECT_FALSE(IsStable(market, Marriage(2)));
  EXPECT_TRUE(IsStable(market, Marriage(2, {{1, 1}})));
}

TEST(StabilityTest, PartialModelRequiresAcceptableSpouse) {
  const auto market =
      MakeMarket(ListModel::kPartial, {{1}, {2}}, {{1}, {}});
  // w2 and m2 married, but m2 does not list w2.
  EXPECT_FALSE(IsStable(market, Marriage(2, {{1, 1}, {2, 2}})));
  EXPECT_TRUE(IsStable(market, Marriage(2, {{1, 1}})));
}

TEST(StabilityTest, AgreesWithNaiveDefinitionOnRandomMarkets) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const bool full = trial % 2 == 0;
    const auto market = full ? RandomFullMarket(n, rng)
                             : RandomPartialMarket(n, rng, 0.7);
    Marriage mu(n);
    std::vector<int> men(n);
    for (int i = 0; i < n; ++i) men[i] = i + 1;
    std::shuffle(men.begin(), men.end(), rng);
    for (int w = 1; w <= n; ++w) {
      if (full || rng() % 3 != 0) mu.marry(w, men[w - 1]);
    }
    const auto h = ToSpouses(mu);
    EXPECT_EQ(BlockingPairs(market, mu),
              naive::BlockingPairs(market.women().lists(), market.men().lists(), h));
    EXPECT_EQ(IsStable(market, mu),
              naive::IsStable(market.women().lists(), market.men().lists(), h));
  }
}

TEST(MarriedSetsTest, Projections) {
  EXPECT_EQ(MarriedSetsOf(Marriage(3)), MarriedSets{});
  const MarriedSets all{{1, 2, 3}, {1, 2, 3}};
  EXPECT_EQ(MarriedSetsOf(Marriage::Identity(3)), all);
  const MarriedSets some{{2}, {3}};
  EXPECT_EQ(MarriedSetsOf(Marriage(3, {{2, 3}})), some);
}

}  // namespace
}  // namespace stablelab
