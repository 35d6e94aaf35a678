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

// Instance generators shared by the sweep driver, the CLI and the
// acceptance checks.

#ifndef STABLELAB_EXPERIMENTS_INSTANCES_HPP_
#define STABLELAB_EXPERIMENTS_INSTANCES_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "stablelab/embed/disj.hpp"
#include "stablelab/market/market.hpp"
#include "stablelab/market/market_io.hpp"
#include "stablelab/market/random_market.hpp"
#include "stablelab/protocol/harness.hpp"

namespace stablelab {

// Verify-stability embedding with k random common entries, so the identity
// marriage has exactly k blocking pairs. Throws ParameterError unless
// 0 <= k <= n(n-1).
MarriageMarket PlantedBlockingPairs(int n, int k, Rng& rng);

// Every participant ranks the other side 1..n. Men-proposing deferred
// acceptance needs n(n+1)/2 proposals here.
MarriageMarket IdenticalListsMarket(int n);

Marriage RandomPerfectMarriage(int n, Rng& rng);

// Independent fair bits for x and y.
DisjInstance RandomDisj(const DisjDomain& domain, Rng& rng);

// Random x, y with no common entry; with `intersect`, one random entry is
// then set in both.
DisjInstance RandomUniquelyIntersecting(const DisjDomain& domain, Rng& rng,
                                        bool intersect);

// {"protocol","n","seed","bits","output","correct"}; correct is null when
// there is nothing to compare against.
Json RunRecord(const std::string& protocol, int n, std::uint64_t seed,
               const ProtocolRun& run, std::optional<bool> correct);

}  // namespace stablelab

#endif  // STABLELAB_EXPERIMENTS_INSTANCES_HPP_
