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

#include "stablelab/query/algorithms.hpp"

#include <algorithm>
#include <random>

#include "stablelab/errors.hpp"

namespace stablelab {

DaQueryRun DaInstrumented(PreferenceOracle& oracle) {
  const int n = oracle.n();
  std::vector<int> fiance(n + 1, 0);  // by woman
  std::vector<int> bride(n + 1, 0);   // by man
  std::vector<int> place(n + 1, 0);   // last place proposed to, by man
  DaQueryRun run{Marriage(n), {}};
  while (true) {
    int m = 0;
    for (int j = 1; j <= n; ++j) {
      if (bride[j] == 0) {
        m = j;
        break;
      }
    }
    if (m == 0) break;
    if (place[m] == n) {
      throw ContractViolation("a man exhausted a full list");
    }
    const int w = oracle.AtPlace(Side::kMan, m, ++place[m]);
    const int current = fiance[w];
    if (current == 0) {
      fiance[w] = m;
      bride[m] = w;
      continue;
    }
    if (oracle.Compare(Side::kWoman, w, m, current)) {
      run.rejections.insert({w, current});
      bride[current] = 0;
      fiance[w] = m;
      bride[m] = w;
    } else {
      run.rejections.insert({w, m});
    }
  }
  for (int w = 1; w <= n; ++w) run.marriage.marry(w, fiance[w]);
  return run;
}

DaInstrumentedResult DaInstrumented(const MarriageMarket& market) {
  if (market.model() != ListModel::kFull) {
    throw DomainError("instrumented deferred acceptance needs full lists");
  }
  LoggedOracle oracle(market);
  auto run = DaInstrumented(oracle);
  return {std::move(run.marriage), std::move(run.rejections), oracle.log()};
}

VerifierRun ComparisonVerifier(PreferenceOracle& oracle, const Marriage& mu,
                               const VerifierOptions& options) {
  const int n = oracle.n();
  if (mu.n() != n || !mu.is_perfect()) {
    throw DomainError("the comparison verifier needs a perfect marriage");
  }
  std::vector<Couple> pairs;
  for (int w = 1; w <= n; ++w) {
    for (int m = 1; m <= n; ++m) {
      if (mu.husband(w) != m) pairs.emplace_back(w, m);
    }
  }
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  if (options.shuffle_seed) std::shuffle(pairs.begin(), pairs.end(), rng);

  VerifierRun run{StabilityVerdict::kStable, {}};
  for (const auto& [w, m] : pairs) {
    const int husband = *mu.husband(w);
    const int wife = *mu.wife(m);
    if (!oracle.Compare(Side::kMan, m, w, wife)) continue;
    bool keeps_husband;
    if (options.shuffle_seed && std::bernoulli_distribution(0.5)(rng)) {
      keeps_husband = !oracle.Compare(Side::kWoman, w, m, husband);
    } else {
      keeps_husband = oracle.Compare(Side::kWoman, w, husband, m);
    }
    if (keeps_husband) {
      run.evidence.insert({w, husband, m});
    } else {
      run.evidence.insert({w, m, husband});
      run.verdict = StabilityVerdict::kUnstable;
    }
  }
  return run;
}

VerifierResult ComparisonVerifier(const MarriageMarket& market,
                                  const Marriage& mu,
                                  const VerifierOptions& options) {
  if (market.model() != ListModel::kFull) {
    throw DomainError("the comparison verifier needs full lists");
  }
  LoggedOracle oracle(market);
  auto run = ComparisonVerifier(oracle, mu, options);
  return {run.verdict, std::move(run.evidence), oracle.log()};
}

OptimalityReport OptimalityCheck(const MarriageMarket& market,
                                 const VerifierOptions& options) {
  const auto da = DaInstrumented(market);
  const auto verifier = ComparisonVerifier(market, da.marriage, options);
  OptimalityReport r;
  r.rejections = static_cast<int>(da.rejections.size());
  r.evidence = static_cast<int>(verifier.evidence.size());
  r.verifier_women = verifier.log.women_side_count();
  r.da_women = da.log.women_side_count();

  std::set<Couple> projected;
  for (const auto& [w, a, b] : verifier.evidence) projected.insert({w, b});
  const bool covered = std::includes(projected.begin(), projected.end(),
                                     da.rejections.begin(),
                                     da.rejections.end());
  r.holds = covered && r.da_women == r.rejections &&
            r.rejections <= r.evidence && r.evidence <= r.verifier_women;
  return r;
}

Json OptimalityReportToJson(const OptimalityReport& r) {
  Json j;
  j["R"] = r.rejections;
  j["Q"] = r.evidence;
  j["verifierW"] = r.verifier_women;
  j["holds"] = r.holds;
  return j;
}

}  // namespace stablelab
