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

// Concrete two-party protocols over marriage markets.

#ifndef STABLELAB_PROTOCOL_PROTOCOLS_HPP_
#define STABLELAB_PROTOCOL_PROTOCOLS_HPP_

#include <cstdint>

#include "stablelab/embed/disj.hpp"
#include "stablelab/embed/high_mid_low.hpp"
#include "stablelab/protocol/harness.hpp"

namespace stablelab {

// Both parties output `value` without communicating.
TwoPartyProtocol ConstantProtocol(int value);

// Alice sends one bit: whether w_1 ranks m_1 first. Both output that bit.
TwoPartyProtocol EchoBitProtocol();

// Bob sends n^2 bits, row-major over (w, m). For m != mu(w) the bit says
// whether m would leave his status in mu for w; for the couple (w, mu(w))
// it says whether m does not list w. Alice combines them with her own bits
// and replies with the verdict bit (1 = unstable). n^2 + 1 bits in total.
TwoPartyProtocol NaiveStabilityProtocol(const Marriage& mu);

// Men-proposing deferred acceptance, full lists only. Per proposal Bob
// sends the woman's index in ceil(log2 n) bits and Alice answers with one
// accept bit. The proposer is the lowest-indexed free man, which both sides
// can track from the transcript. Outputs the M-optimal stable marriage.
TwoPartyProtocol GsProtocol();

struct EstimatorParams {
  double epsilon = 0.2;
  double delta = 0.1;
  double failure_prob = 0.05;
};

// k = ceil(ln(2/p) / (2 (delta/2)^2)). Throws ParameterError unless
// epsilon >= delta > 0 and 0 < p < 1.
int EstimatorSampleCount(const EstimatorParams& params);

// Decides whether mu has at least epsilon*n^2 blocking pairs or at most
// (epsilon - delta)*n^2. Public coins pick k uniform pairs; Alice sends one
// k-bit message (does w prefer m over mu(w)); Bob counts pairs where he
// agrees, compares count/k with epsilon - delta/2 and sends the 1-bit
// verdict (1 = AtLeast). k + 1 bits in total.
TwoPartyProtocol BlockingFractionEstimator(const Marriage& mu,
                                           const EstimatorParams& params);

// Wraps a finder protocol whose output is a marriage of the high/mid/low
// market. Each party locally computes d(mu, mu_1) and outputs 1 iff it is at
// most epsilon*n. Adds no messages.
TwoPartyProtocol DisjDeciderProtocol(const HighMidLowParams& p,
                                     const TwoPartyProtocol& finder,
                                     double epsilon);

// Runs DisjDeciderProtocol with Alice's profile built from d.x alone and
// Bob's from d.y alone. Throws ParameterError unless epsilon < (1-delta)/2,
// DomainError if d is not over p.domain(), and PreconditionError if d has
// two or more common entries.
ProtocolRun RunDisjDecider(const DisjInstance& d, const HighMidLowParams& p,
                           const TwoPartyProtocol& finder, double epsilon,
                           std::uint64_t seed);

}  // namespace stablelab

#endif  // STABLELAB_PROTOCOL_PROTOCOLS_HPP_
