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

// Query-metered stable-marriage algorithms and the women-side query
// accounting check for deferred acceptance.

#ifndef STABLELAB_QUERY_ALGORITHMS_HPP_
#define STABLELAB_QUERY_ALGORITHMS_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "stablelab/market/market.hpp"
#include "stablelab/market/market_io.hpp"
#include "stablelab/protocol/harness.hpp"
#include "stablelab/query/oracle.hpp"

namespace stablelab {

// (w, m): w rejected m.
using RejectionSet = std::set<Couple>;

// (w, a, b): a comparison query onto W established that w prefers a over b.
using ComparisonTriple = std::tuple<int, int, int>;
using ComparisonEvidence = std::set<ComparisonTriple>;

struct DaQueryRun {
  Marriage marriage;
  RejectionSet rejections;
};

// Men-proposing deferred acceptance, lowest free man first. A man finds his
// next woman with one AtPlace query onto M. A proposal to a single woman is
// accepted without a query; otherwise one comparison onto W ("does w prefer
// the proposer over her fiance?") decides, and exactly one man is rejected.
// Full lists only.
DaQueryRun DaInstrumented(PreferenceOracle& oracle);

struct DaInstrumentedResult {
  Marriage marriage;
  RejectionSet rejections;
  QueryLog log;
};

// Throws DomainError for partial lists.
DaInstrumentedResult DaInstrumented(const MarriageMarket& market);

struct VerifierOptions {
  // When set, pairs are visited in a seeded random order and each women-side
  // comparison is asked in a seeded random orientation.
  std::optional<std::uint64_t> shuffle_seed;
};

struct VerifierRun {
  StabilityVerdict verdict;
  ComparisonEvidence evidence;
};

// For every (w, m) with m != mu(w): ask M whether m prefers w over mu(m);
// only on yes, ask W whether w prefers mu(w) over m. A yes then no is a
// blocking pair. Default order is row-major. mu must be perfect.
VerifierRun ComparisonVerifier(PreferenceOracle& oracle, const Marriage& mu,
                               const VerifierOptions& options = {});

struct VerifierResult {
  StabilityVerdict verdict;
  ComparisonEvidence evidence;
  QueryLog log;
};

// Throws DomainError for partial lists or a non-perfect mu.
VerifierResult ComparisonVerifier(const MarriageMarket& market,
                                  const Marriage& mu,
                                  const VerifierOptions& options = {});

struct OptimalityReport {
  int rejections = 0;        // |R|
  int evidence = 0;          // |Q|
  int verifier_women = 0;    // women-side queries of the verifier
  int da_women = 0;          // women-side queries of deferred acceptance
  bool holds = false;
};

// Runs DaInstrumented, then ComparisonVerifier on its output, and checks
// that da_women == |R|, that every (w, m) in R appears as (w, *, m) in Q,
// and that |R| <= |Q| <= verifier_women.
OptimalityReport OptimalityCheck(const MarriageMarket& market,
                                 const VerifierOptions& options = {});

// {"R":int,"Q":int,"verifierW":int,"holds":bool}
Json OptimalityReportToJson(const OptimalityReport& r);

}  // namespace stablelab

#endif  // STABLELAB_QUERY_ALGORITHMS_HPP_
