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

#ifndef STABLELAB_MARKET_DEFERRED_ACCEPTANCE_HPP_
#define STABLELAB_MARKET_DEFERRED_ACCEPTANCE_HPP_

#include "stablelab/market/market.hpp"

namespace stablelab {

struct DeferredAcceptanceResult {
  Marriage marriage;
  int nights = 0;      // one proposal per night
  int rejections = 0;  // includes proposals to women who do not list the man
};

// Men-proposing deferred acceptance. Each night the lowest-indexed
// provisionally-single man who still has untried women on his list proposes
// to the best of them. Works for full and partial lists; in the partial model
// a man who exhausts his list stays single. Returns the M-optimal stable
// marriage.
DeferredAcceptanceResult RunDeferredAcceptance(const MarriageMarket& market);

inline Marriage DeferredAcceptance(const MarriageMarket& market) {
  return RunDeferredAcceptance(market).marriage;
}

}  // namespace stablelab

#endif  // STABLELAB_MARKET_DEFERRED_ACCEPTANCE_HPP_
