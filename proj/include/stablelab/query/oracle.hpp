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

// Query models over preference profiles: pairwise comparison ("does p prefer
// a over b?") and rank queries ("where does p rank x?", "who is at place
// k?"), with per-side metering.

#ifndef STABLELAB_QUERY_ORACLE_HPP_
#define STABLELAB_QUERY_ORACLE_HPP_

#include <string>
#include <variant>
#include <vector>

#include "stablelab/market/market.hpp"

namespace stablelab {

struct ComparisonQuery {
  Side side;
  int who;
  int a;
  int b;
};

struct RankOfQuery {
  Side side;
  int who;
  int target;
};

struct AtPlaceQuery {
  Side side;
  int who;
  int k;
};

// Touches both profiles at once; no single side can answer it.
struct BlockingPairQuery {
  int woman;
  int man;
};

using Query =
    std::variant<ComparisonQuery, RankOfQuery, AtPlaceQuery, BlockingPairQuery>;

// Side that answers `q`; ModelViolation for a two-sided query.
Side AnsweringSide(const Query& q);
bool IsBoolean(const Query& q);
// "cmp who a b", "rank who target", "place who k", "block w m".
std::string Describe(const Query& q);

class QueryLog {
 public:
  struct Entry {
    Side side;
    std::string descriptor;
    int answer;
  };

  void Record(Side side, std::string descriptor, int answer);
  int women_side_count() const { return women_; }
  int men_side_count() const { return men_; }
  int total() const { return women_ + men_; }
  const std::vector<Entry>& entries() const { return entries_; }
  // One line per query: "W cmp 2 3 1 -> 1".
  std::string Dump() const;

 private:
  int women_ = 0;
  int men_ = 0;
  std::vector<Entry> entries_;
};

// Direct evaluation against a market. Comparisons return 0/1 and throw
// QueryError when a == b. Rank queries need full lists (QueryError
// otherwise) and a k within [1, n]. Each call appends one log entry.
bool AnswerComparison(const MarriageMarket& market, const ComparisonQuery& q,
                      QueryLog& log);
int AnswerRank(const MarriageMarket& market, const RankOfQuery& q,
               QueryLog& log);
int AnswerRank(const MarriageMarket& market, const AtPlaceQuery& q,
               QueryLog& log);

// Source of query answers for the algorithms below.
class PreferenceOracle {
 public:
  virtual ~PreferenceOracle() = default;
  virtual int n() const = 0;
  virtual int Ask(const Query& q) = 0;

  bool Compare(Side side, int who, int a, int b) {
    return Ask(ComparisonQuery{side, who, a, b}) != 0;
  }
  int RankOf(Side side, int who, int target) {
    return Ask(RankOfQuery{side, who, target});
  }
  int AtPlace(Side side, int who, int k) {
    return Ask(AtPlaceQuery{side, who, k});
  }
};

// Answers from a market and logs every query. Two-sided queries are
// rejected with ModelViolation.
class LoggedOracle : public PreferenceOracle {
 public:
  explicit LoggedOracle(const MarriageMarket& market) : market_(market) {}
  int n() const override { return market_.n(); }
  int Ask(const Query& q) override;
  const QueryLog& log() const { return log_; }

 private:
  const MarriageMarket& market_;
  QueryLog log_;
};

// Answers a single side's queries from that side's profile.
int AnswerFromProfile(const PreferenceProfile& profile, bool full,
                      const Query& q);

}  // namespace stablelab

#endif  // STABLELAB_QUERY_ORACLE_HPP_
