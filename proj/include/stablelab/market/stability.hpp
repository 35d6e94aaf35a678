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

#ifndef STABLELAB_MARKET_STABILITY_HPP_
#define STABLELAB_MARKET_STABILITY_HPP_

#include <set>
#include <utility>
#include <vector>

#include "stablelab/market/market.hpp"

namespace stablelab {

// Free-function forms of the profile preference lookups.
bool Prefers(const PreferenceProfile& profile, int who, int a, int b);
bool WeaklyPrefers(const PreferenceProfile& profile, int who, int a, int b);

// Whether `who` (on the side that owns `profile`) would leave its current
// status in `mu` for `candidate`. An unmarried participant prefers any listed
// candidate over staying single.
bool WouldDeviate(const PreferenceProfile& profile, Side side,
                  const Marriage& mu, int who, int candidate);

// (w, m) blocks mu when each strictly prefers the other over their status in
// mu. A married couple never blocks.
bool IsBlockingPair(const MarriageMarket& market, const Marriage& mu, int w,
                    int m);

// No blocking pair, and every married participant lists their spouse.
bool IsStable(const MarriageMarket& market, const Marriage& mu);

// Every blocking pair, in row-major (w, then m) order.
std::vector<Couple> BlockingPairs(const MarriageMarket& market,
                                  const Marriage& mu);

struct MarriedSets {
  std::set<int> women;
  std::set<int> men;
  friend bool operator==(const MarriedSets&, const MarriedSets&) = default;
};

MarriedSets MarriedSetsOf(const Marriage& mu);

}  // namespace stablelab

#endif  // STABLELAB_MARKET_STABILITY_HPP_
