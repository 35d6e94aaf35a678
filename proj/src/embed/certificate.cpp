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

#include "stablelab/embed/certificate.hpp"

#include "stablelab/embed/embeddings.hpp"
#include "stablelab/errors.hpp"
#include "stablelab/market/distance.hpp"
#include "stablelab/market/stability.hpp"

namespace stablelab {

const char* CertificateKindName(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kNone:
      return "none";
    case CertificateKind::kStable:
      return "stable";
    case CertificateKind::kUnstable:
      return "unstable";
    case CertificateKind::kUniqueStable:
      return "unique-stable";
  }
  return "none";
}

bool VerifyCertificate(const MarriageMarket& market,
                       const EmbeddingCertificate& cert,
                       const OracleLimits& limits) {
  if (cert.kind == CertificateKind::kNone) return true;
  if (!cert.marriage) throw DomainError("certificate lacks its marriage");
  const Marriage& mu = *cert.marriage;
  if (mu.n() != market.n()) return false;
  switch (cert.kind) {
    case CertificateKind::kStable:
      return IsStable(market, mu);
    case CertificateKind::kUnstable:
      return !IsStable(market, mu);
    case CertificateKind::kUniqueStable: {
      const auto all = EnumerateStable(market, limits);
      return all.size() == 1 && all.front() == mu;
    }
    case CertificateKind::kNone:
      break;
  }
  return true;
}

Json CertificateToJson(const EmbeddingCertificate& cert) {
  Json j;
  j["kind"] = CertificateKindName(cert.kind);
  j["marriage"] = cert.marriage ? MarriageToJson(*cert.marriage) : Json();
  j["disj"] = cert.disj ? Json(*cert.disj) : Json();
  return j;
}

EmbeddingCertificate CertificateFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw FormatError("certificate needs a string \"kind\"");
  }
  EmbeddingCertificate cert;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "none") {
    cert.kind = CertificateKind::kNone;
  } else if (kind == "stable") {
    cert.kind = CertificateKind::kStable;
  } else if (kind == "unstable") {
    cert.kind = CertificateKind::kUnstable;
  } else if (kind == "unique-stable") {
    cert.kind = CertificateKind::kUniqueStable;
  } else {
    throw FormatError("unknown certificate kind \"" + kind + "\"");
  }
  if (j.contains("marriage") && !j.at("marriage").is_null()) {
    cert.marriage = MarriageFromJson(j.at("marriage"));
  }
  if (j.contains("disj") && !j.at("disj").is_null()) {
    const Json& v = j.at("disj");
    if (!v.is_number_integer() || (v != 0 && v != 1)) {
      throw FormatError("\"disj\" must be 0, 1 or null");
    }
    cert.disj = v.get<int>();
  }
  return cert;
}

std::string SerializeCertificate(const EmbeddingCertificate& cert) {
  return CertificateToJson(cert).dump() + "\n";
}

EmbeddingCertificate ParseCertificate(const std::string& text) {
  try {
    return CertificateFromJson(Json::parse(text));
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

namespace {

EmbeddingCertificate UniqueOrUnstable(int disj, Marriage mu) {
  return {disj == 1 ? CertificateKind::kUniqueStable
                    : CertificateKind::kUnstable,
          std::move(mu), disj};
}

}  // namespace

CertifiedMarket CertifiedVerifyStability(const DisjInstance& d) {
  const int disj = d.disj();
  auto market = EmbedVerifyStability(d);
  const int n = market.n();
  return {std::move(market),
          {disj == 1 ? CertificateKind::kStable : CertificateKind::kUnstable,
           Marriage::Identity(n), disj}};
}

CertifiedMarket CertifiedFindStablePartial(const DisjInstance& d) {
  auto market = EmbedFindStablePartial(d);
  const int n = market.n();
  return {std::move(market), UniqueOrUnstable(d.disj(), Marriage::Identity(n))};
}

CertifiedMarket CertifiedUniqueFull(const DisjInstance& d) {
  auto market = EmbedUniqueFull(EmbedFindStablePartial(d));
  const int n = market.n();
  return {std::move(market), UniqueOrUnstable(d.disj(), Marriage::Identity(n))};
}

CertifiedMarket CertifiedIsSingle(const DisjInstance& d, Side side) {
  auto embedding = EmbedIsSingle(d, side);
  const int n = d.domain().side();
  Marriage mu(2 * n);
  for (int i = 1; i <= n; ++i) {
    if (side == Side::kWoman) {
      mu.marry(i, n + i);
    } else {
      mu.marry(n + i, i);
    }
  }
  return {std::move(embedding.market), UniqueOrUnstable(d.disj(), mu)};
}

CertifiedMarket CertifiedHighMidLow(const HighMidLowParams& p,
                                    const DisjInstance& d) {
  auto market = BuildHighMidLow(p, d);
  const auto witness = UniqueIntersection(d);
  EmbeddingCertificate cert;
  cert.disj = d.disj();
  if (witness) {
    cert.kind = CertificateKind::kUniqueStable;
    cert.marriage = witness->disjoint()
                        ? CanonicalMu1(p.n())
                        : CanonicalMu0(p, witness->entry->first,
                                       witness->entry->second);
  }
  return {std::move(market), std::move(cert)};
}

int DistanceToStability(const MarriageMarket& market, const Marriage& mu,
                        const EmbeddingCertificate& cert,
                        const OracleLimits& limits) {
  std::optional<Marriage> unique;
  if (cert.kind == CertificateKind::kUniqueStable) unique = cert.marriage;
  return DistanceToStability(market, mu, unique, limits);
}

}  // namespace stablelab
