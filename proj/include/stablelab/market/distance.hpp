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

#ifndef STABLELAB_MARKET_DISTANCE_HPP_
#define STABLELAB_MARKET_DISTANCE_HPP_

#include <optional>

#include "stablelab/market/enumerate.hpp"
#include "stablelab/market/market.hpp"

namespace stablelab {

// Divorce distance: n minus the number of couples shared by two perfect
// marriages. Throws DomainError if either marriage is not perfect over n.
int DivorceDistance(const Marriage& a, const Marriage& b, int n);

// Minimum divorce distance from `mu` to any stable marriage of a full-list
// market. Uses the oracle when n is within bound. Past the bound the caller
// must supply `certified_unique`, a marriage known to be the market's only
// stable marriage (the embedding generators produce these); otherwise a
// CapacityError is thrown.
int DistanceToStability(const MarriageMarket& market, const Marriage& mu,
                        const std::optional<Marriage>& certified_unique = {},
                        const OracleLimits& limits = {});

// d(mu) <= epsilon * n.
bool IsApproximatelyStable(int distance, double epsilon, int n);

}  // namespace stablelab

#endif  // STABLELAB_MARKET_DISTANCE_HPP_
