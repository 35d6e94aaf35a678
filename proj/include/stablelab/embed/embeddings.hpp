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

// Embeddings of set disjointness into marriage markets, and market-to-market
// embeddings. Each market-level generator is split into a women-side and a
// men-side builder: the women's profile is a function of Alice's bits (or
// the input women's profile) alone, and dually for the men. Ties left open
// by a construction are broken by ascending index.
//
// Contracts, with mu_id = {(w_i, m_i)}:
//
//   EmbedVerifyStability    mu_id stable  <=>  DISJ(x, y) = 1
//   EmbedFindStablePartial  DISJ = 1 => mu_id is the unique stable marriage;
//                           DISJ = 0 => mu_id unstable
//   CompletePreferences     mu stable in the input  <=>  mu is a submarriage
//                           of some stable marriage of the output
//   EmbedUniqueFull         mu_id unique stable => mu'_id unique stable;
//                           mu_id unstable => mu'_id unstable
//   EmbedIsSingle           p single in some stable marriage <=> DISJ = 1
//   LiftSingleToMarried     w single in some stable input marriage <=>
//                           (w, m'_w) in some <=> in every stable output one
//   NegateSingle            w single in some stable input marriage <=>
//                           m' married in every stable output marriage

#ifndef STABLELAB_EMBED_EMBEDDINGS_HPP_
#define STABLELAB_EMBED_EMBEDDINGS_HPP_

#include <cstdint>

#include "stablelab/embed/disj.hpp"
#include "stablelab/market/market.hpp"

namespace stablelab {

// Off-diagonal DISJ into full lists: w_i lists {m_j : x(i,j)=1}, then m_i,
// then every other man.
PreferenceProfile VerifyStabilityWomen(const BitAssignment& x);
PreferenceProfile VerifyStabilityMen(const BitAssignment& y);
MarriageMarket EmbedVerifyStability(const DisjInstance& d);

// As above, but each list stops after the participant's own index.
PreferenceProfile FindStablePartialWomen(const BitAssignment& x);
PreferenceProfile FindStablePartialMen(const BitAssignment& y);
MarriageMarket EmbedFindStablePartial(const DisjInstance& d);

// Order of the padding blocks appended by the completion embedding. The
// contract holds for any order; kShuffled draws an independent permutation
// per participant from `seed`.
enum class PaddingOrder { kAscending, kDescending, kShuffled };

// Partial lists over n into full lists over 2n. Layout: indices 1..n are the
// original participants, n+i is the padding partner w'_i (resp. m'_i).
// w_i: own list, m'_i, then the remaining men; w'_i: m_i, then the rest.
PreferenceProfile CompleteWomen(const PreferenceProfile& women,
                                PaddingOrder order = PaddingOrder::kAscending,
                                std::uint64_t seed = 0);
PreferenceProfile CompleteMen(const PreferenceProfile& men,
                              PaddingOrder order = PaddingOrder::kAscending,
                              std::uint64_t seed = 0);
MarriageMarket CompletePreferences(
    const MarriageMarket& market,
    PaddingOrder order = PaddingOrder::kAscending, std::uint64_t seed = 0);

// Completion with every padding block sorted by index.
MarriageMarket EmbedUniqueFull(const MarriageMarket& market);

// The is-single construction over 2n participants per side, for the
// off-diagonal domain over [n]. Women: w_1..w_n, then the distinguished
// woman at index n+1, then w'_2..w'_n (empty lists). Men: m_1..m_n, then
// m'_1..m'_n.
PreferenceProfile IsSingleWomen(const BitAssignment& x);
PreferenceProfile IsSingleMen(const BitAssignment& y);

struct IsSingleEmbedding {
  MarriageMarket market;
  ParticipantId distinguished;  // index n+1 on the requested side
};

// For `side` = kMan the women-side construction is built with the roles of
// x and y exchanged and the market is transposed, so the men's profile still
// depends on y alone.
IsSingleEmbedding EmbedIsSingle(const DisjInstance& d,
                                Side side = Side::kWoman);

struct LiftedCouple {
  MarriageMarket market;  // full lists over 2n
  Couple couple;          // (w, m'_w) = (w, n + w)
};

LiftedCouple LiftSingleToMarried(const MarriageMarket& market, int woman);

struct NegatedSingle {
  MarriageMarket market;  // partial lists over n + 1
  int new_man;            // m' = n + 1; the added woman w' is n + 1 too
};

// w's list gains m' at the end; m' lists only w; w' lists nobody.
NegatedSingle NegateSingle(const MarriageMarket& market, int woman);

}  // namespace stablelab

#endif  // STABLELAB_EMBED_EMBEDDINGS_HPP_
