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

#ifndef STABLELAB_MARKET_RANDOM_MARKET_HPP_
#define STABLELAB_MARKET_RANDOM_MARKET_HPP_

#include <cstdint>
#include <random>

#include "stablelab/market/market.hpp"

namespace stablelab {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent per-trial seeds from a
// base seed and coordinates.
std::uint64_t MixSeed(std::uint64_t x);
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a,
                         std::uint64_t b = 0);

// Every list an independent uniform permutation.
PreferenceProfile RandomFullProfile(int n, Rng& rng);
MarriageMarket RandomFullMarket(int n, Rng& rng);

// Every list an independent uniform random subset (each candidate kept with
// probability `keep`) in uniform random order.
PreferenceProfile RandomPartialProfile(int n, Rng& rng, double keep = 0.6);
MarriageMarket RandomPartialMarket(int n, Rng& rng, double keep = 0.6);

}  // namespace stablelab

#endif  // STABLELAB_MARKET_RANDOM_MARKET_HPP_
