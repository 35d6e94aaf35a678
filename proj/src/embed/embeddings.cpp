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

#include "stablelab/embed/embeddings.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "stablelab/errors.hpp"
#include "stablelab/market/random_market.hpp"

namespace stablelab {
namespace {

void RequireOffDiagonal(const BitAssignment& bits) {
  if (bits.domain().kind() != DisjDomainKind::kOffDiagonal) {
    throw DomainError("this embedding needs an off-diagonal DISJ domain");
  }
}

// Bit for the pair (woman i, man j) as seen by the side that owns `bits`:
// women read x(i, j) for their own row i, men read y(i, j) for column j.
bool OwnBit(const BitAssignment& bits, Side side, int self, int other) {
  return side == Side::kWoman ? bits.at(self, other) : bits.at(other, self);
}

// Lists of the two off-diagonal embeddings: flagged candidates, self, and
// (for full lists) everyone else, each block ascending.
PreferenceProfile OffDiagonalProfile(const BitAssignment& bits, Side side,
                                     bool full) {
  RequireOffDiagonal(bits);
  const int n = bits.domain().side();
  std::vector<std::vector<int>> lists(n);
  for (int self = 1; self <= n; ++self) {
    auto& l = lists[self - 1];
    for (int other = 1; other <= n; ++other) {
      if (other != self && OwnBit(bits, side, self, other)) l.push_back(other);
    }
    l.push_back(self);
    if (full) {
      for (int other = 1; other <= n; ++other) {
        if (other != self && !OwnBit(bits, side, self, other)) {
          l.push_back(other);
        }
      }
    }
  }
  return PreferenceProfile(n, std::move(lists));
}

// Appends every index of [1, total] not yet on `list`, in `order`.
void AppendPadding(std::vector<int>& list, int total, PaddingOrder order,
                   std::uint64_t seed) {
  std::vector<bool> listed(total + 1, false);
  for (int c : list) listed[c] = true;
  std::vector<int> rest;
  for (int c = 1; c <= total; ++c) {
    if (!listed[c]) rest.push_back(c);
  }
  switch (order) {
    case PaddingOrder::kAscending:
      break;
    case PaddingOrder::kDescending:
      std::reverse(rest.begin(), rest.end());
      break;
    case PaddingOrder::kShuffled: {
      Rng rng(seed);
      std::shuffle(rest.begin(), rest.end(), rng);
      break;
    }
  }
  list.insert(list.end(), rest.begin(), rest.end());
}

PreferenceProfile CompleteSide(const PreferenceProfile& own, Side side,
                               PaddingOrder order, std::uint64_t seed) {
  const int n = own.n();
  const int total = 2 * n;
  std::vector<std::vector<int>> lists(total);
  const std::uint64_t side_tag = side == Side::kWoman ? 1 : 2;
  for (int i = 1; i <= n; ++i) {
    auto& orig = lists[i - 1];
    orig = own.list(i);
    orig.push_back(n + i);
    AppendPadding(orig, total, order, DeriveSeed(seed, side_tag, i));
    auto& pad = lists[n + i - 1];
    pad.push_back(i);
    AppendPadding(pad, total, order, DeriveSeed(seed, side_tag, n + i));
  }
  return PreferenceProfile(total, std::move(lists));
}

}  // namespace

PreferenceProfile VerifyStabilityWomen(const BitAssignment& x) {
  return OffDiagonalProfile(x, Side::kWoman, true);
}

PreferenceProfile VerifyStabilityMen(const BitAssignment& y) {
  return OffDiagonalProfile(y, Side::kMan, true);
}

MarriageMarket EmbedVerifyStability(const DisjInstance& d) {
  return MarriageMarket(ListModel::kFull, VerifyStabilityWomen(d.x),
                        VerifyStabilityMen(d.y));
}

PreferenceProfile FindStablePartialWomen(const BitAssignment& x) {
  return OffDiagonalProfile(x, Side::kWoman, false);
}

PreferenceProfile FindStablePartialMen(const BitAssignment& y) {
  return OffDiagonalProfile(y, Side::kMan, false);
}

MarriageMarket EmbedFindStablePartial(const DisjInstance& d) {
  return MarriageMarket(ListModel::kPartial, FindStablePartialWomen(d.x),
                        FindStablePartialMen(d.y));
}

PreferenceProfile CompleteWomen(const PreferenceProfile& women,
                                PaddingOrder order, std::uint64_t seed) {
  return CompleteSide(women, Side::kWoman, order, seed);
}

PreferenceProfile CompleteMen(const PreferenceProfile& men, PaddingOrder order,
                              std::uint64_t seed) {
  return CompleteSide(men, Side::kMan, order, seed);
}

MarriageMarket CompletePreferences(const MarriageMarket& market,
                                   PaddingOrder order, std::uint64_t seed) {
  return MarriageMarket(ListModel::kFull,
                        CompleteWomen(market.women(), order, seed),
                        CompleteMen(market.men(), order, seed));
}

MarriageMarket EmbedUniqueFull(const MarriageMarket& market) {
  return CompletePreferences(market, PaddingOrder::kAscending);
}

PreferenceProfile IsSingleWomen(const BitAssignment& x) {
  RequireOffDiagonal(x);
  const int n = x.domain().side();
  std::vector<std::vector<int>> lists(2 * n);
  for (int i = 1; i <= n; ++i) {
    auto& l = lists[i - 1];
    for (int j = 1; j <= n; ++j) {
      if (j != i && x.at(i, j)) l.push_back(j);
    }
    l.push_back(n + i);
  }
  auto& distinguished = lists[n];
  for (int j = 1; j <= n; ++j) distinguished.push_back(n + j);
  return PreferenceProfile(2 * n, std::move(lists));
}

PreferenceProfile IsSingleMen(const BitAssignment& y) {
  RequireOffDiagonal(y);
  const int n = y.domain().side();
  std::vector<std::vector<int>> lists(2 * n);
  for (int j = 1; j <= n; ++j) {
    auto& l = lists[j - 1];
    for (int i = 1; i <= n; ++i) {
      if (i != j && y.at(i, j)) l.push_back(i);
    }
    lists[n + j - 1] = {j, n + 1};
  }
  return PreferenceProfile(2 * n, std::move(lists));
}

IsSingleEmbedding EmbedIsSingle(const DisjInstance& d, Side side) {
  const int n = d.domain().side();
  if (side == Side::kWoman) {
    return {MarriageMarket(ListModel::kPartial, IsSingleWomen(d.x),
                           IsSingleMen(d.y)),
            {Side::kWoman, n + 1}};
  }
  MarriageMarket swapped(ListModel::kPartial, IsSingleWomen(d.y),
                         IsSingleMen(d.x));
  return {swapped.transposed(), {Side::kMan, n + 1}};
}

LiftedCouple LiftSingleToMarried(const MarriageMarket& market, int woman) {
  const int n = market.n();
  if (woman < 1 || woman > n) throw DomainError("woman index out of range");
  return {CompletePreferences(market), {woman, n + woman}};
}

NegatedSingle NegateSingle(const MarriageMarket& market, int woman) {
  const int n = market.n();
  if (woman < 1 || woman > n) throw DomainError("woman index out of range");
  const int extra = n + 1;
  std::vector<std::vector<int>> women = market.women().lists();
  std::vector<std::vector<int>> men = market.men().lists();
  women[woman - 1].push_back(extra);
  women.emplace_back();  // w'
  men.push_back({woman});  // m'
  return {MarriageMarket(ListModel::kPartial,
                         PreferenceProfile(extra, std::move(women)),
                         PreferenceProfile(extra, std::move(men))),
          extra};
}

}  // namespace stablelab
