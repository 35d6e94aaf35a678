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

#include "stablelab/market/random_market.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace stablelab {

std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a,
                         std::uint64_t b) {
  return MixSeed(MixSeed(MixSeed(base) ^ a) ^ b);
}

PreferenceProfile RandomFullProfile(int n, Rng& rng) {
  std::vector<std::vector<int>> lists(n);
  for (auto& l : lists) {
    l.resize(n);
    std::iota(l.begin(), l.end(), 1);
    std::shuffle(l.begin(), l.end(), rng);
  }
  return PreferenceProfile(n, std::move(lists));
}

MarriageMarket RandomFullMarket(int n, Rng& rng) {
  PreferenceProfile women = RandomFullProfile(n, rng);
  PreferenceProfile men = RandomFullProfile(n, rng);
  return MarriageMarket(ListModel::kFull, std::move(women), std::move(men));
}

PreferenceProfile RandomPartialProfile(int n, Rng& rng, double keep) {
  std::bernoulli_distribution coin(keep);
  std::vector<std::vector<int>> lists(n);
  for (auto& l : lists) {
    for (int c = 1; c <= n; ++c) {
      if (coin(rng)) l.push_back(c);
    }
    std::shuffle(l.begin(), l.end(), rng);
  }
  return PreferenceProfile(n, std::move(lists));
}

MarriageMarket RandomPartialMarket(int n, Rng& rng, double keep) {
  PreferenceProfile women = RandomPartialProfile(n, rng, keep);
  PreferenceProfile men = RandomPartialProfile(n, rng, keep);
  return MarriageMarket(ListModel::kPartial, std::move(women), std::move(men));
}

}  // namespace stablelab
