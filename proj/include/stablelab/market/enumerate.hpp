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

// Brute-force stable-marriage oracle. This is the reference every
// construction in the library is checked against, so it deliberately shares
// nothing with deferred acceptance: it walks every candidate marriage and
// filters by the stability definition.

#ifndef STABLELAB_MARKET_ENUMERATE_HPP_
#define STABLELAB_MARKET_ENUMERATE_HPP_

#include <functional>
#include <vector>

#include "stablelab/market/market.hpp"

namespace stablelab {

struct OracleLimits {
  int full = 8;     // n! perfect marriages
  int partial = 6;  // all injective partial maps
};

// Calls `fn` on each of the n! perfect marriages, in lexicographic order of
// the husband sequence.
void ForEachPerfectMarriage(int n, const std::function<void(const Marriage&)>& fn);

// Calls `fn` on every injective partial map between women and men, including
// the empty marriage.
void ForEachMarriage(int n, const std::function<void(const Marriage&)>& fn);

// Every stable marriage of `market`, sorted. Throws CapacityError if n is
// above the bound for the market's list model.
std::vector<Marriage> EnumerateStable(const MarriageMarket& market,
                                      const OracleLimits& limits = {});

// True if n is within the oracle bound for `model`.
bool WithinOracleBound(int n, ListModel model, const OracleLimits& limits = {});

}  // namespace stablelab

#endif  // STABLELAB_MARKET_ENUMERATE_HPP_
