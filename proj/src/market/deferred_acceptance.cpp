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

#include "stablelab/market/deferred_acceptance.hpp"

#include <set>
#include <vector>

namespace stablelab {

DeferredAcceptanceResult RunDeferredAcceptance(const MarriageMarket& market) {
  const int n = market.n();
  const PreferenceProfile& women = market.women();
  const PreferenceProfile& men = market.men();

  DeferredAcceptanceResult out{Marriage(n), 0, 0};
  Marriage& mu = out.marriage;
  std::vector<size_t> next(n + 1, 0);
  std::set<int> single;
  for (int m = 1; m <= n; ++m) {
    if (!men.list(m).empty()) single.insert(m);
  }

  auto reject = [&](int m) {
    ++out.rejections;
    if (++next[m] < men.list(m).size()) {
      single.insert(m);
    }
  };

  while (!single.empty()) {
    const int m = *single.begin();
    single.erase(single.begin());
    const int w = men.list(m)[next[m]];
    ++out.nights;
    if (!women.lists_target(w, m)) {
      reject(m);
      continue;
    }
    const auto current = mu.husband(w);
    if (!current) {
      mu.marry(w, m);
    } else if (women.prefers(w, m, *current)) {
      mu.divorce_woman(w);
      mu.marry(w, m);
      reject(*current);
    } else {
      reject(m);
    }
  }
  return out;
}

}  // namespace stablelab
