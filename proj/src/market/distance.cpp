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

#include "stablelab/market/distance.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "stablelab/errors.hpp"

namespace stablelab {

int DivorceDistance(const Marriage& a, const Marriage& b, int n) {
  if (a.n() != n || b.n() != n) {
    throw DomainError("marriage size differs from n=" + std::to_string(n));
  }
  if (!a.is_perfect() || !b.is_perfect()) {
    throw DomainError("divorce distance needs perfect marriages");
  }
  int shared = 0;
  for (int w = 1; w <= n; ++w) shared += a.husband(w) == b.husband(w);
  return n - shared;
}

int DistanceToStability(const MarriageMarket& market, const Marriage& mu,
                        const std::optional<Marriage>& certified_unique,
                        const OracleLimits& limits) {
  if (market.model() != ListModel::kFull) {
    throw DomainError("distance to stability is defined for full lists only");
  }
  const int n = market.n();
  if (certified_unique) return DivorceDistance(mu, *certified_unique, n);
  if (!WithinOracleBound(n, ListModel::kFull, limits)) {
    throw CapacityError("distance to stability at n=" + std::to_string(n) +
                        " needs a uniqueness certificate");
  }
  int best = std::numeric_limits<int>::max();
  for (const auto& s : EnumerateStable(market, limits)) {
    best = std::min(best, DivorceDistance(mu, s, n));
  }
  return best;
}

bool IsApproximatelyStable(int distance, double epsilon, int n) {
  return distance <= epsilon * n;
}

}  // namespace stablelab
