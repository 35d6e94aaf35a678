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

#include "stablelab/experiments/instances.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "stablelab/embed/embeddings.hpp"
#include "stablelab/errors.hpp"

namespace stablelab {

MarriageMarket PlantedBlockingPairs(int n, int k, Rng& rng) {
  const auto domain = DisjDomain::OffDiagonal(n);
  if (k < 0 || k > domain.size()) {
    throw ParameterError("cannot plant " + std::to_string(k) +
                         " blocking pairs at n=" + std::to_string(n));
  }
  std::vector<int> cells(domain.size());
  std::iota(cells.begin(), cells.end(), 0);
  std::shuffle(cells.begin(), cells.end(), rng);
  auto d = DisjInstance::Zeros(domain);
  for (int c = 0; c < k; ++c) {
    const auto [i, j] = domain.entry(cells[c]);
    d.x.set(i, j, true);
    d.y.set(i, j, true);
  }
  return EmbedVerifyStability(d);
}

MarriageMarket IdenticalListsMarket(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::vector<int>> lists(n, order);
  return MarriageMarket(ListModel::kFull, PreferenceProfile(n, lists),
                        PreferenceProfile(n, lists));
}

Marriage RandomPerfectMarriage(int n, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  Marriage mu(n);
  for (int w = 1; w <= n; ++w) mu.marry(w, perm[w - 1]);
  return mu;
}

DisjInstance RandomDisj(const DisjDomain& domain, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  auto d = DisjInstance::Zeros(domain);
  for (int c = 0; c < domain.size(); ++c) {
    const auto [i, j] = domain.entry(c);
    d.x.set(i, j, coin(rng));
    d.y.set(i, j, coin(rng));
  }
  return d;
}

DisjInstance RandomUniquelyIntersecting(const DisjDomain& domain, Rng& rng,
                                        bool intersect) {
  std::uniform_int_distribution<int> owner(0, 2);  // x, y or neither
  auto d = DisjInstance::Zeros(domain);
  for (int c = 0; c < domain.size(); ++c) {
    const auto [i, j] = domain.entry(c);
    const int o = owner(rng);
    d.x.set(i, j, o == 0);
    d.y.set(i, j, o == 1);
  }
  if (intersect && domain.size() > 0) {
    std::uniform_int_distribution<int> cell(0, domain.size() - 1);
    const auto [i, j] = domain.entry(cell(rng));
    d.x.set(i, j, true);
    d.y.set(i, j, true);
  }
  return d;
}

Json RunRecord(const std::string& protocol, int n, std::uint64_t seed,
               const ProtocolRun& run, std::optional<bool> correct) {
  Json j;
  j["protocol"] = protocol;
  j["n"] = n;
  j["seed"] = seed;
  j["bits"] = run.transcript.total_bits();
  j["output"] = OutputToJson(run.output);
  j["correct"] = correct ? Json(*correct) : Json(nullptr);
  return j;
}

}  // namespace stablelab
