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

// Claims that an embedding generator attaches to the market it builds, and
// the oracle check for them.

#ifndef STABLELAB_EMBED_CERTIFICATE_HPP_
#define STABLELAB_EMBED_CERTIFICATE_HPP_

#include <optional>
#include <string>

#include "stablelab/embed/disj.hpp"
#include "stablelab/embed/high_mid_low.hpp"
#include "stablelab/market/enumerate.hpp"
#include "stablelab/market/market.hpp"
#include "stablelab/market/market_io.hpp"

namespace stablelab {

enum class CertificateKind {
  kNone,          // no claim
  kStable,        // marriage is stable
  kUnstable,      // marriage is not stable
  kUniqueStable,  // marriage is the only stable marriage
};

const char* CertificateKindName(CertificateKind kind);

struct EmbeddingCertificate {
  CertificateKind kind = CertificateKind::kNone;
  std::optional<Marriage> marriage;  // required unless kind is kNone
  std::optional<int> disj;           // DISJ value of the source instance

  friend bool operator==(const EmbeddingCertificate&,
                         const EmbeddingCertificate&) = default;
};

// True iff the certificate's claim holds. kStable and kUnstable are checked
// directly; kUniqueStable enumerates, so it throws CapacityError past the
// oracle bound. A certificate missing its marriage is rejected with
// DomainError.
bool VerifyCertificate(const MarriageMarket& market,
                       const EmbeddingCertificate& cert,
                       const OracleLimits& limits = {});

// {"kind":"none"|"stable"|"unstable"|"unique-stable",
//  "marriage":{...}|null, "disj":0|1|null}
Json CertificateToJson(const EmbeddingCertificate& cert);
EmbeddingCertificate CertificateFromJson(const Json& j);
std::string SerializeCertificate(const EmbeddingCertificate& cert);
EmbeddingCertificate ParseCertificate(const std::string& text);

struct CertifiedMarket {
  MarriageMarket market;
  EmbeddingCertificate certificate;
};

// mu_id stable or unstable according to DISJ.
CertifiedMarket CertifiedVerifyStability(const DisjInstance& d);
// DISJ = 1: mu_id unique stable; DISJ = 0: mu_id unstable.
CertifiedMarket CertifiedFindStablePartial(const DisjInstance& d);
// The previous market pushed through EmbedUniqueFull; the claim is about the
// identity marriage over 2n.
CertifiedMarket CertifiedUniqueFull(const DisjInstance& d);
// DISJ = 1: {(w_i, m'_i)} unique stable, the distinguished participant
// single; DISJ = 0: that marriage unstable. Mirrored for Side::kMan.
CertifiedMarket CertifiedIsSingle(const DisjInstance& d,
                                  Side side = Side::kWoman);
// Disjoint: mu_1 unique stable. Unique common entry (a, b): mu_0(a, b) unique
// stable. Two or more common entries: no claim beyond disj = 0.
CertifiedMarket CertifiedHighMidLow(const HighMidLowParams& p,
                                    const DisjInstance& d);

// Distance to stability using a kUniqueStable certificate when present.
int DistanceToStability(const MarriageMarket& market, const Marriage& mu,
                        const EmbeddingCertificate& cert,
                        const OracleLimits& limits = {});

}  // namespace stablelab

#endif  // STABLELAB_EMBED_CERTIFICATE_HPP_
