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

// Parameter sweeps over protocols and query algorithms, reported as CSV.
//
// Targets:
//   naive-verify      random full market; mu alternates between a random
//                     perfect marriage (even trials) and the M-optimal one
//   gs                random full market, or identical lists with
//                     market=identical
//   estimator         planted instance; even trials at fraction epsilon,
//                     odd trials at epsilon - delta
//   disj-decider      high/mid/low market over a random instance with at most
//                     one common entry (disjoint on even trials); gs finder
//   da-queries        instrumented deferred acceptance, adapted with the men
//                     at home
//   verifier          comparison verifier on the M-optimal marriage, adapted
//                     symmetrically
//   optimality-check  deferred acceptance vs. the comparison verifier; bits
//                     is empty and correct is the "holds" flag
//
// Params: epsilon (0.2), delta (0.1), failure-prob (0.05), hml-delta (0.5),
// market (random).

#ifndef STABLELAB_EXPERIMENTS_SWEEP_HPP_
#define STABLELAB_EXPERIMENTS_SWEEP_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stablelab {

struct SweepSpec {
  std::vector<int> n_list;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string target;
  std::map<std::string, std::string> params;
};

struct SweepRow {
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;  // DeriveSeed(spec.seed, n, trial)
  std::string target;
  std::optional<std::int64_t> bits;
  std::optional<int> queries_w;
  std::optional<int> queries_m;
  bool correct = false;
  std::string error;  // non-empty when the trial threw
};

const std::vector<std::string>& SweepTargets();

// Throws ParameterError for an unknown target, trials < 1, an empty n list,
// a bad param, or an n the target cannot use.
void ValidateSweep(const SweepSpec& spec);

SweepRow RunSweepTrial(const SweepSpec& spec, int n, int trial);

// Rows in (n_list order, trial) order regardless of `threads`.
std::vector<SweepRow> RunSweep(const SweepSpec& spec, int threads = 1);

// Header "n,trial,seed,target,bits,queries_w,queries_m,correct". Missing
// numbers are empty; a failed trial has correct = "error".
std::string SweepCsv(const std::vector<SweepRow>& rows);

}  // namespace stablelab

#endif  // STABLELAB_EXPERIMENTS_SWEEP_HPP_
