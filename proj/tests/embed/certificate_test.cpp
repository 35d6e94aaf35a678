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

#include <gtest/gtest.h>

#include "embed/embed_test_util.hpp"
#include "stablelab/embed/embeddings.hpp"
#include "stablelab/errors.hpp"
#include "stablelab/market/distance.hpp"

namespace stablelab {
namespace {

DisjInstance HmlIntersecting(const HighMidLowParams& p, int a, int b) {
  auto d = DisjInstance::Zeros(p.domain());
  d.x.set(a, b, true);
  d.y.set(a, b, true);
  return d;
}

TEST(CertificateTest, EmptyIsVacuous) {
  const auto p = HighMidLowParams::Make(8, 0.5);
  EXPECT_TRUE(VerifyCertificate(
      BuildHighMidLow(p, DisjInstance::Zeros(p.domain())), {}));
}

TEST(CertificateTest, Mu1ClaimHoldsOnlyWhenDisjoint) {
  const auto p = HighMidLowParams::Make(8, 0.5);
  const EmbeddingCertificate claim{CertificateKind::kUniqueStable,
                                   CanonicalMu1(8), 1};
  EXPECT_TRUE(VerifyCertificate(
      BuildHighMidLow(p, DisjInstance::Zeros(p.domain())), claim));
  EXPECT_FALSE(
      VerifyCertificate(BuildHighMidLow(p, HmlIntersecting(p, 1, 2)), claim));
}

TEST(CertificateTest, StableAndUnstableClaims) {
  auto d = DisjInstance::Zeros(DisjDomain::OffDiagonal(2));
  const auto m = EmbedVerifyStability(d);
  EXPECT_TRUE(VerifyCertificate(
      m, {CertificateKind::kStable, Marriage::Identity(2), std::nullopt}));
  EXPECT_FALSE(VerifyCertificate(
      m, {CertificateKind::kUnstable, Marriage::Identity(2), std::nullopt}));
  EXPECT_THROW(VerifyCertificate(m, {CertificateKind::kStable, {}, {}}),
               DomainError);
}

TEST(CertificateTest, UniquenessNeedsOracleReach) {
  const auto p = HighMidLowParams::Make(12, 0.5);
  const auto c = CertifiedHighMidLow(p, DisjInstance::Zeros(p.domain()));
  EXPECT_THROW(VerifyCertificate(c.market, c.certificate), CapacityError);
  // Direct claims need no enumeration.
  EXPECT_TRUE(VerifyCertificate(
      c.market, {CertificateKind::kStable, CanonicalMu1(12), 1}));
}

TEST(CertificateTest, JsonRoundTrip) {
  const EmbeddingCertificate cert{CertificateKind::kUniqueStable,
                                  CanonicalMu1(4), 1};
  const auto text = SerializeCertificate(cert);
  EXPECT_EQ(text,
            "{\"kind\":\"unique-stable\",\"marriage\":{\"n\":4,\"pairs\":"
            "[[1,3],[2,4],[3,1],[4,2]]},\"disj\":1}\n");
  EXPECT_EQ(ParseCertificate(text), cert);
  EXPECT_EQ(ParseCertificate(SerializeCertificate({})),
            EmbeddingCertificate{});
  EXPECT_THROW(ParseCertificate("{\"kind\":\"maybe\"}"), FormatError);
  EXPECT_THROW(ParseCertificate("{\"kind\":\"none\",\"disj\":2}"),
               FormatError);
}

TEST(CertifiedGeneratorsTest, AllClaimsHoldAtTwo) {
  ForEachDisjInstance(DisjDomain::OffDiagonal(2), [](const DisjInstance& d) {
    for (const auto& c :
         {CertifiedVerifyStability(d), CertifiedFindStablePartial(d),
          CertifiedUniqueFull(d), CertifiedIsSingle(d, Side::kWoman),
          CertifiedIsSingle(d, Side::kMan)}) {
      ASSERT_EQ(c.certificate.disj, d.disj());
      ASSERT_NE(c.certificate.kind, CertificateKind::kNone);
      ASSERT_TRUE(VerifyCertificate(c.market, c.certificate))
          << SerializeCertificate(c.certificate);
    }
  });
}

TEST(CertifiedGeneratorsTest, SampledClaimsHoldAtThree) {
  const auto domain = DisjDomain::OffDiagonal(3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const DisjInstance d(testing::RandomBits(domain, rng, 0.25),
                         testing::RandomBits(domain, rng, 0.25));
    for (const auto& c :
         {CertifiedVerifyStability(d), CertifiedFindStablePartial(d),
          CertifiedUniqueFull(d), CertifiedIsSingle(d, Side::kWoman)}) {
      ASSERT_TRUE(VerifyCertificate(c.market, c.certificate));
    }
  }
}

TEST(CertifiedGeneratorsTest, HighMidLowClaims) {
  const auto p = HighMidLowParams::Make(8, 0.5);
  const auto disjoint = CertifiedHighMidLow(p, DisjInstance::Zeros(p.domain()));
  EXPECT_EQ(disjoint.certificate.marriage, CanonicalMu1(8));
  const auto one = CertifiedHighMidLow(p, HmlIntersecting(p, 2, 1));
  EXPECT_EQ(one.certificate.marriage, CanonicalMu0(8, 2, 1));
  EXPECT_EQ(one.certificate.disj, 0);
  EXPECT_TRUE(VerifyCertificate(one.market, one.certificate));
  auto two = HmlIntersecting(p, 1, 1);
  two.x.set(2, 2, true);
  two.y.set(2, 2, true);
  const auto many = CertifiedHighMidLow(p, two);
  EXPECT_EQ(many.certificate.kind, CertificateKind::kNone);
  EXPECT_EQ(many.certificate.disj, 0);
}

TEST(CertifiedDistanceTest, BeyondOracleBoundWithCertificate) {
  const auto p = HighMidLowParams::Make(16, 0.5);
  const auto c = CertifiedHighMidLow(p, HmlIntersecting(p, 3, 4));
  const int d = DistanceToStability(c.market, CanonicalMu1(16), c.certificate);
  EXPECT_GE(d, (1 - p.delta()) * p.n());
  EXPECT_EQ(DistanceToStability(c.market, CanonicalMu0(p, 3, 4), c.certificate),
            0);
  EXPECT_THROW(DistanceToStability(c.market, CanonicalMu1(16),
                                   EmbeddingCertificate{}),
               CapacityError);
}

TEST(CertifiedDistanceTest, OracleAgreesWithinBound) {
  const auto p = HighMidLowParams::Make(8, 0.5);
  const auto c = CertifiedHighMidLow(p, HmlIntersecting(p, 1, 1));
  EXPECT_EQ(DistanceToStability(c.market, CanonicalMu1(8), c.certificate),
            DistanceToStability(c.market, CanonicalMu1(8)));
  EXPECT_GE(DistanceToStability(c.market, CanonicalMu1(8)), 4);
}

}  // namespace
}  // namespace stablelab
