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

#include "stablelab/errors.hpp"

namespace stablelab {

bool Prefers(const PreferenceProfile& profile, int who, int a, int b) {
  return profile.prefers(who, a, b);
}

bool WeaklyPrefers(const PreferenceProfile& profile, int who, int a, int b) {
  return profile.weakly_prefers(who, a, b);
}

bool WouldDeviate(const PreferenceProfile& profile, Side side,
                  const Marriage& mu, int who, int candidate) {
  const auto current = mu.spouse({side, who});
  if (!current) return profile.lists_target(who, candidate);
  return profile.prefers(who, candidate, *current);
}

bool IsBlockingPair(const MarriageMarket& market, const Marriage& mu, int w,
                    int m) {
  if (mu.n() != market.n()) {
    throw DomainError("marriage size does not match market size");
  }
  if (mu.contains(w, m)) return false;
  return WouldDeviate(market.women(), Side::kWoman, mu, w, m) &&
         WouldDeviate(market.men(), Side::kMan, mu, m, w);
}

bool IsStable(const MarriageMarket& market, const Marriage& mu) {
  if (mu.n() != market.n()) {
    throw DomainError("marriage size does not match market size");
  }
  const int n = market.n();
  for (const auto& [w, m] : mu.pairs()) {
    if (!market.women().lists_target(w, m) ||
        !market.men().lists_target(m, w)) {
      return false;
    }
  }
  for (int w = 1; w <= n; ++w) {
    for (int m = 1; m <= n; ++m) {
      if (IsBlockingPair(market, mu, w, m)) return false;
    }
  }
  return true;
}

std::vector<Couple> BlockingPairs(const MarriageMarket& market,
                                  const Marriage& mu) {
  std::vector<Couple> out;
  for (int w = 1; w <= market.n(); ++w) {
    for (int m = 1; m <= market.n(); ++m) {
      if (IsBlockingPair(market, mu, w, m)) out.emplace_back(w, m);
    }
  }
  return out;
}

MarriedSets MarriedSetsOf(const Marriage& mu) {
  MarriedSets s;
  for (const auto& [w, m] : mu.pairs()) {
    s.women.insert(w);
    s.men.insert(m);
  }
  return s;
}

}  // namespace stablelab
