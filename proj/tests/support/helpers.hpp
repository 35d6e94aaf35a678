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

#ifndef STABLELAB_TESTS_SUPPORT_HELPERS_HPP_
#define STABLELAB_TESTS_SUPPORT_HELPERS_HPP_

#include <functional>
#include <vector>

#include "naive_oracle.hpp"
#include "stablelab/market/market.hpp"

namespace stablelab::testing {

inline MarriageMarket MakeMarket(ListModel model,
                                 std::vector<std::vector<int>> women,
                                 std::vector<std::vector<int>> men) {
  const int n = static_cast<int>(women.size());
  return MarriageMarket(model, PreferenceProfile(n, std::move(women)),
                        PreferenceProfile(n, std::move(men)));
}

inline naive::Spouses ToSpouses(const Marriage& mu) {
  naive::Spouses h(mu.n(), 0);
  for (const auto& [w, m] : mu.pairs()) h[w - 1] = m;
  return h;
}

inline Marriage FromSpouses(const naive::Spouses& h) {
  const int n = static_cast<int>(h.size());
  Marriage mu(n);
  for (int w = 1; w <= n; ++w) {
    if (h[w - 1] != 0) mu.marry(w, h[w - 1]);
  }
  return mu;
}

// Stable set computed by the naive reference oracle.
inline std::vector<Marriage> NaiveStable(const MarriageMarket& market) {
  std::vector<Marriage> out;
  for (const auto& h :
       naive::StableSet(market.women().lists(), market.men().lists(),
                        market.model() == ListModel::kFull)) {
    out.push_back(FromSpouses(h));
  }
  return out;
}

// Every list over [1,n] of length <= max_len without repeats.
inline std::vector<std::vector<int>> AllLists(int n, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int c = 1; c <= n; ++c) {
      if (used[c]) continue;
      used[c] = true;
      cur.push_back(c);
      self(self);
      cur.pop_back();
      used[c] = false;
    }
  };
  rec(rec);
  return out;
}

// Calls fn on every partial-model market of size n (every participant
// independently takes every possible list). 625 markets at n = 2.
inline void ForEachPartialMarket(
    int n, const std::function<void(const MarriageMarket&)>& fn) {
  const auto lists = AllLists(n, n);
  const int k = static_cast<int>(lists.size());
  const int slots = 2 * n;
  std::vector<int> choice(slots, 0);
  while (true) {
    std::vector<std::vector<int>> women, men;
    for (int s = 0; s < n; ++s) women.push_back(lists[choice[s]]);
    for (int s = n; s < slots; ++s) men.push_back(lists[choice[s]]);
    fn(MakeMarket(ListModel::kPartial, women, men));
    int s = 0;
    while (s < slots && ++choice[s] == k) choice[s++] = 0;
    if (s == slots) break;
  }
}

}  // namespace stablelab::testing

#endif  // STABLELAB_TESTS_SUPPORT_HELPERS_HPP_
