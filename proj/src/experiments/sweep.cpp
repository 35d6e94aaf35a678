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

#include "stablelab/experiments/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "stablelab/embed/high_mid_low.hpp"
#include "stablelab/errors.hpp"
#include "stablelab/experiments/instances.hpp"
#include "stablelab/market/deferred_acceptance.hpp"
#include "stablelab/market/stability.hpp"
#include "stablelab/protocol/protocols.hpp"
#include "stablelab/query/adapter.hpp"
#include "stablelab/query/algorithms.hpp"

namespace stablelab {
namespace {

const std::set<std::string>& KnownParams() {
  static const std::set<std::string> keys = {"epsilon", "delta",
                                             "failure-prob", "hml-delta",
                                             "market"};
  return keys;
}

double NumberParam(const SweepSpec& spec, const std::string& key,
                   double fallback) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size() || !std::isfinite(v)) throw 0;
    return v;
  } catch (...) {
    throw ParameterError("param " + key + " is not a number: " + it->second);
  }
}

EstimatorParams Estimator(const SweepSpec& spec) {
  return {NumberParam(spec, "epsilon", 0.2), NumberParam(spec, "delta", 0.1),
          NumberParam(spec, "failure-prob", 0.05)};
}

double HmlDelta(const SweepSpec& spec) {
  return NumberParam(spec, "hml-delta", 0.5);
}

std::string MarketKind(const SweepSpec& spec) {
  const auto it = spec.params.find("market");
  const std::string kind = it == spec.params.end() ? "random" : it->second;
  if (kind != "random" && kind != "identical") {
    throw ParameterError("param market must be random or identical");
  }
  return kind;
}

// Planted blocking-pair counts for the two estimator classes.
int PlantHigh(const EstimatorParams& p, int n) {
  return static_cast<int>(std::ceil(p.epsilon * n * n - 1e-9));
}
int PlantLow(const EstimatorParams& p, int n) {
  return static_cast<int>(std::floor((p.epsilon - p.delta) * n * n + 1e-9));
}

void ValidateN(const SweepSpec& spec, int n) {
  if (n < 1) throw ParameterError("n must be positive");
  const auto& t = spec.target;
  if (t == "estimator") {
    const auto p = Estimator(spec);
    if (PlantHigh(p, n) > n * (n - 1) || PlantLow(p, n) < 0) {
      throw ParameterError("cannot plant the estimator classes at n=" +
                           std::to_string(n));
    }
  } else if (t == "disj-decider") {
    HighMidLowParams::Make(n, HmlDelta(spec));
  }
}

void RunProtocolTrial(const SweepSpec& spec, int n, Rng& rng, SweepRow& row) {
  const auto& t = spec.target;
  if (t == "naive-verify") {
    const auto m = RandomFullMarket(n, rng);
    const Marriage mu =
        row.trial % 2 == 0 ? RandomPerfectMarriage(n, rng) : DeferredAcceptance(m);
    const auto run = RunTwoParty(NaiveStabilityProtocol(mu), m, row.seed);
    row.bits = run.transcript.total_bits();
    const auto want =
        IsStable(m, mu) ? StabilityVerdict::kStable : StabilityVerdict::kUnstable;
    row.correct = run.output == ProtocolOutput(want);
  } else if (t == "gs") {
    const auto m = MarketKind(spec) == "identical" ? IdenticalListsMarket(n)
                                                   : RandomFullMarket(n, rng);
    const auto run = RunTwoParty(GsProtocol(), m, row.seed);
    row.bits = run.transcript.total_bits();
    row.correct = run.output == ProtocolOutput(DeferredAcceptance(m));
  } else if (t == "estimator") {
    const auto p = Estimator(spec);
    const bool high = row.trial % 2 == 0;
    const auto m =
        PlantedBlockingPairs(n, high ? PlantHigh(p, n) : PlantLow(p, n), rng);
    const auto run = RunTwoParty(
        BlockingFractionEstimator(Marriage::Identity(n), p), m, row.seed);
    row.bits = run.transcript.total_bits();
    row.correct = run.output == ProtocolOutput(high ? FractionVerdict::kAtLeast
                                                    : FractionVerdict::kAtMost);
  } else if (t == "disj-decider") {
    const auto p = HighMidLowParams::Make(n, HmlDelta(spec));
    const auto d = RandomUniquelyIntersecting(p.domain(), rng, row.trial % 2 == 1);
    const auto run = RunDisjDecider(d, p, GsProtocol(),
                                    NumberParam(spec, "epsilon", 0.2), row.seed);
    row.bits = run.transcript.total_bits();
    row.correct = run.output == ProtocolOutput(d.disj());
  }
}

void RunQueryTrial(const SweepSpec& spec, int n, Rng& rng, SweepRow& row) {
  const auto& t = spec.target;
  const auto m = RandomFullMarket(n, rng);
  if (t == "da-queries") {
    const auto direct = DaInstrumented(m);
    const auto run = RunTwoParty(AdaptStrategy(t, DaStrategy(), Side::kMan), m,
                                 row.seed);
    row.bits = run.transcript.total_bits();
    row.queries_w = direct.log.women_side_count();
    row.queries_m = direct.log.men_side_count();
    row.correct = run.output == ProtocolOutput(DeferredAcceptance(m)) &&
                  *row.queries_w == static_cast<int>(direct.rejections.size());
  } else if (t == "verifier") {
    const auto mu = DeferredAcceptance(m);
    const auto direct = ComparisonVerifier(m, mu);
    const auto run =
        RunTwoParty(AdaptStrategy(t, VerifierStrategy(mu)), m, row.seed);
    row.bits = run.transcript.total_bits();
    row.queries_w = direct.log.women_side_count();
    row.queries_m = direct.log.men_side_count();
    row.correct = run.output == ProtocolOutput(StabilityVerdict::kStable);
  } else if (t == "optimality-check") {
    const auto da = DaInstrumented(m);
    const auto report = OptimalityCheck(m);
    row.queries_w = da.log.women_side_count();
    row.queries_m = da.log.men_side_count();
    row.correct = report.holds;
  }
}

}  // namespace

const std::vector<std::string>& SweepTargets() {
  static const std::vector<std::string> targets = {
      "naive-verify", "gs",       "estimator",       "disj-decider",
      "da-queries",   "verifier", "optimality-check"};
  return targets;
}

void ValidateSweep(const SweepSpec& spec) {
  const auto& targets = SweepTargets();
  if (std::find(targets.begin(), targets.end(), spec.target) == targets.end()) {
    throw ParameterError("unknown sweep target: " + spec.target);
  }
  if (spec.trials < 1) throw ParameterError("trials must be at least 1");
  if (spec.n_list.empty()) throw ParameterError("empty n list");
  for (const auto& [key, value] : spec.params) {
    if (!KnownParams().count(key)) throw ParameterError("unknown param: " + key);
  }
  EstimatorSampleCount(Estimator(spec));
  MarketKind(spec);
  HmlDelta(spec);
  for (int n : spec.n_list) ValidateN(spec, n);
}

SweepRow RunSweepTrial(const SweepSpec& spec, int n, int trial) {
  SweepRow row;
  row.n = n;
  row.trial = trial;
  row.seed = DeriveSeed(spec.seed, static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(trial));
  row.target = spec.target;
  Rng rng(row.seed);
  try {
    RunProtocolTrial(spec, n, rng, row);
    RunQueryTrial(spec, n, rng, row);
  } catch (const std::exception& e) {
    row.bits.reset();
    row.queries_w.reset();
    row.queries_m.reset();
    row.correct = false;
    row.error = e.what();
    if (row.error.empty()) row.error = "unknown failure";
  }
  return row;
}

std::vector<SweepRow> RunSweep(const SweepSpec& spec, int threads) {
  ValidateSweep(spec);
  std::vector<std::pair<int, int>> jobs;
  for (int n : spec.n_list) {
    for (int t = 0; t < spec.trials; ++t) jobs.emplace_back(n, t);
  }
  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      rows[i] = RunSweepTrial(spec, jobs[i].first, jobs[i].second);
    }
  };
  const int count = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,trial,seed,target,bits,queries_w,queries_m,correct\n";
  auto opt = [&](const auto& v) {
    if (v) out << *v;
  };
  for (const auto& r : rows) {
    out << r.n << ',' << r.trial << ',' << r.seed << ',' << r.target << ',';
    opt(r.bits);
    out << ',';
    opt(r.queries_w);
    out << ',';
    opt(r.queries_m);
    out << ',' << (!r.error.empty() ? "error" : r.correct ? "true" : "false")
        << '\n';
  }
  return out.str();
}

}  // namespace stablelab
