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

#include "stablelab/query/oracle.hpp"

#include "stablelab/errors.hpp"

namespace stablelab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckIndex(int i, int n, const char* what) {
  if (i < 1 || i > n) {
    throw QueryError(std::string(what) + " index " + std::to_string(i) +
                     " out of range");
  }
}

}  // namespace

Side AnsweringSide(const Query& q) {
  return std::visit(
      Overloaded{[](const BlockingPairQuery&) -> Side {
                   throw ModelViolation(
                       "a blocking-pair query needs both profiles");
                 },
                 [](const auto& s) { return s.side; }},
      q);
}

bool IsBoolean(const Query& q) {
  return std::holds_alternative<ComparisonQuery>(q) ||
         std::holds_alternative<BlockingPairQuery>(q);
}

std::string Describe(const Query& q) {
  auto num = [](int v) { return std::to_string(v); };
  return std::visit(
      Overloaded{
          [&](const ComparisonQuery& c) {
            return "cmp " + num(c.who) + " " + num(c.a) + " " + num(c.b);
          },
          [&](const RankOfQuery& r) {
            return "rank " + num(r.who) + " " + num(r.target);
          },
          [&](const AtPlaceQuery& p) {
            return "place " + num(p.who) + " " + num(p.k);
          },
          [&](const BlockingPairQuery& b) {
            return "block " + num(b.woman) + " " + num(b.man);
          }},
      q);
}

void QueryLog::Record(Side side, std::string descriptor, int answer) {
  (side == Side::kWoman ? women_ : men_) += 1;
  entries_.push_back({side, std::move(descriptor), answer});
}

std::string QueryLog::Dump() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e.side == Side::kWoman ? "W " : "M ";
    out += e.descriptor;
    out += " -> ";
    out += std::to_string(e.answer);
    out += '\n';
  }
  return out;
}

int AnswerFromProfile(const PreferenceProfile& profile, bool full,
                      const Query& q) {
  const int n = profile.n();
  return std::visit(
      Overloaded{
          [&](const ComparisonQuery& c) -> int {
            CheckIndex(c.who, n, "participant");
            CheckIndex(c.a, n, "candidate");
            CheckIndex(c.b, n, "candidate");
            if (c.a == c.b) throw QueryError("comparison of a candidate with itself");
            return profile.prefers(c.who, c.a, c.b) ? 1 : 0;
          },
          [&](const RankOfQuery& r) -> int {
            if (!full) throw QueryError("rank queries need full lists");
            CheckIndex(r.who, n, "participant");
            CheckIndex(r.target, n, "target");
            return profile.rank(r.who, r.target);
          },
          [&](const AtPlaceQuery& p) -> int {
            if (!full) throw QueryError("rank queries need full lists");
            CheckIndex(p.who, n, "participant");
            CheckIndex(p.k, n, "place");
            return profile.list(p.who)[p.k - 1];
          },
          [&](const BlockingPairQuery&) -> int {
            throw ModelViolation("a blocking-pair query needs both profiles");
          }},
      q);
}

namespace {

int AnswerAndLog(const MarriageMarket& market, const Query& q, QueryLog& log) {
  const Side side = AnsweringSide(q);
  const int answer = AnswerFromProfile(
      market.profile(side), market.model() == ListModel::kFull, q);
  log.Record(side, Describe(q), answer);
  return answer;
}

}  // namespace

bool AnswerComparison(const MarriageMarket& market, const ComparisonQuery& q,
                      QueryLog& log) {
  return AnswerAndLog(market, q, log) != 0;
}

int AnswerRank(const MarriageMarket& market, const RankOfQuery& q,
               QueryLog& log) {
  return AnswerAndLog(market, q, log);
}

int AnswerRank(const MarriageMarket& market, const AtPlaceQuery& q,
               QueryLog& log) {
  return AnswerAndLog(market, q, log);
}

int LoggedOracle::Ask(const Query& q) { return AnswerAndLog(market_, q, log_); }

}  // namespace stablelab
