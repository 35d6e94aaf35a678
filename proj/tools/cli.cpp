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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "stablelab/embed/certificate.hpp"
#include "stablelab/embed/embeddings.hpp"
#include "stablelab/embed/high_mid_low.hpp"
#include "stablelab/errors.hpp"
#include "stablelab/experiments/instances.hpp"
#include "stablelab/experiments/sweep.hpp"
#include "stablelab/market/deferred_acceptance.hpp"
#include "stablelab/market/distance.hpp"
#include "stablelab/market/enumerate.hpp"
#include "stablelab/market/market_io.hpp"
#include "stablelab/market/random_market.hpp"
#include "stablelab/market/stability.hpp"
#include "stablelab/protocol/protocols.hpp"
#include "stablelab/query/algorithms.hpp"

namespace stablelab::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::string out;
  std::string format;

  // generate
  std::string kind;
  int n = 0;
  std::optional<double> delta;
  std::string disj;
  std::string disj_file;
  std::string market;
  int woman = 0;
  std::string side = "women";
  std::string order = "asc";
  std::string model = "full";
  double keep = 0.6;
  std::string cert;
  bool check = false;

  // verify / protocol
  std::string marriage;
  std::string name;
  std::optional<double> epsilon;
  std::optional<double> failure_prob;
  std::string transcript;

  // sweep
  std::string target;
  std::vector<int> n_list;
  int trials = 1;
  std::vector<std::string> params;
  int threads = 1;

  // optimality-check
  std::optional<std::uint64_t> shuffle_seed;
};

class Sink {
 public:
  Sink(const Options& o, std::ostream& out) : path_(o.out), out_(out) {}
  void Write(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
    } else {
      WriteTextFile(path_, text);
    }
  }

 private:
  std::string path_;
  std::ostream& out_;
};

std::string Format(const Options& o, const char* fallback, bool csv_ok) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f == "csv" && !csv_ok) {
    throw UsageError("this command has no csv output");
  }
  return f;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string Line(const Json& j) { return j.dump() + "\n"; }

MarriageMarket RequireMarket(const Options& o) {
  if (o.market.empty()) throw UsageError("--market is required");
  return LoadMarket(o.market);
}

// --- DISJ inputs ------------------------------------------------------------

std::optional<DisjInstance> DisjFromFile(const Options& o) {
  if (o.disj_file.empty()) return std::nullopt;
  if (!o.disj.empty()) throw UsageError("--disj and --disj-file are exclusive");
  return ParseDisj(ReadTextFile(o.disj_file));
}

DisjInstance DisjFromSpec(const std::string& spec, const DisjDomain& domain,
                          Rng& rng) {
  if (spec.empty() || spec == "zeros") return DisjInstance::Zeros(domain);
  if (spec == "random") return RandomDisj(domain, rng);
  if (spec == "random-disjoint") {
    return RandomUniquelyIntersecting(domain, rng, false);
  }
  if (spec == "random-unique") {
    return RandomUniquelyIntersecting(domain, rng, true);
  }
  if (spec.rfind("unique:", 0) == 0) {
    int i = 0;
    int j = 0;
    char comma = 0;
    std::istringstream in(spec.substr(7));
    if (!(in >> i >> comma >> j) || comma != ',' || !in.eof()) {
      throw UsageError("--disj unique:i,j expects two integers");
    }
    if (!domain.contains(i, j)) {
      throw DomainError("entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is outside the DISJ domain");
    }
    auto d = DisjInstance::Zeros(domain);
    d.x.set(i, j, true);
    d.y.set(i, j, true);
    return d;
  }
  throw UsageError("unknown --disj value: " + spec);
}

DisjInstance ResolveDisj(const Options& o, const DisjDomain& domain,
                         Rng& rng) {
  if (auto d = DisjFromFile(o)) {
    if (!(d->domain() == domain)) {
      throw DomainError("DISJ file is over a different domain");
    }
    return *d;
  }
  return DisjFromSpec(o.disj, domain, rng);
}

// n for off-diagonal kinds: --n, or the side of the --disj-file domain.
int OffDiagonalN(const Options& o) {
  if (o.n > 0) return o.n;
  if (auto d = DisjFromFile(o)) return d->domain().side();
  throw UsageError("--n is required");
}

// --- generate ---------------------------------------------------------------

PaddingOrder ParseOrder(const std::string& s) {
  if (s == "asc") return PaddingOrder::kAscending;
  if (s == "desc") return PaddingOrder::kDescending;
  return PaddingOrder::kShuffled;
}

int CmdGenerate(const Options& o, std::ostream& out) {
  if (o.kind.empty()) throw UsageError("--kind is required");
  Format(o, "json", false);
  Rng rng(o.seed);
  std::optional<CertifiedMarket> certified;
  std::optional<MarriageMarket> plain;

  const std::string& k = o.kind;
  if (k == "random") {
    if (o.n < 1) throw UsageError("--n is required");
    plain = o.model == "partial" ? RandomPartialMarket(o.n, rng, o.keep)
                                 : RandomFullMarket(o.n, rng);
  } else if (k == "verify-embed" || k == "partial-embed" || k == "is-single" ||
             (k == "unique-full" && o.market.empty())) {
    const int n = OffDiagonalN(o);
    const auto d = ResolveDisj(o, DisjDomain::OffDiagonal(n), rng);
    if (k == "verify-embed") {
      certified = CertifiedVerifyStability(d);
    } else if (k == "partial-embed") {
      certified = CertifiedFindStablePartial(d);
    } else if (k == "is-single") {
      certified = CertifiedIsSingle(d, o.side == "men" ? Side::kMan
                                                       : Side::kWoman);
    } else {
      certified = CertifiedUniqueFull(d);
    }
  } else if (k == "hml") {
    if (o.n < 1) throw UsageError("--n is required");
    const auto p = HighMidLowParams::Make(o.n, o.delta.value_or(0.5));
    certified = CertifiedHighMidLow(p, ResolveDisj(o, p.domain(), rng));
  } else if (k == "unique-full") {
    plain = EmbedUniqueFull(RequireMarket(o));
  } else if (k == "complete") {
    plain = CompletePreferences(RequireMarket(o), ParseOrder(o.order), o.seed);
  } else if (k == "negate-single" || k == "lift-married") {
    if (o.woman < 1) throw UsageError("--woman is required");
    const auto m = RequireMarket(o);
    plain = k == "negate-single" ? NegateSingle(m, o.woman).market
                                 : LiftSingleToMarried(m, o.woman).market;
  } else {
    throw UsageError("unknown --kind: " + k);
  }

  if (!certified && (!o.cert.empty() || o.check)) {
    throw UsageError("--kind " + k + " carries no certificate");
  }
  const MarriageMarket& market = certified ? certified->market : *plain;
  if (o.check && !VerifyCertificate(market, certified->certificate)) {
    throw ContractViolation("generated market fails its certificate");
  }
  if (!o.cert.empty()) {
    WriteTextFile(o.cert, SerializeCertificate(certified->certificate));
  }
  Sink(o, out).Write(SerializeMarket(market));
  return kExitOk;
}

// --- solve / enumerate / verify ---------------------------------------------

std::string PairsCsv(const std::vector<Couple>& pairs) {
  std::string s = "w,m\n";
  for (const auto& [w, m] : pairs) {
    s += std::to_string(w) + "," + std::to_string(m) + "\n";
  }
  return s;
}

int CmdSolve(const Options& o, std::ostream& out) {
  const auto mu = DeferredAcceptance(RequireMarket(o));
  const bool csv = Format(o, "json", true) == "csv";
  Sink(o, out).Write(csv ? PairsCsv(mu.pairs()) : SerializeMarriage(mu));
  return kExitOk;
}

int CmdEnumerate(const Options& o, std::ostream& out) {
  const auto stable = EnumerateStable(RequireMarket(o));
  if (Format(o, "json", true) == "csv") {
    std::string s = "index,w,m\n";
    for (std::size_t i = 0; i < stable.size(); ++i) {
      for (const auto& [w, m] : stable[i].pairs()) {
        s += std::to_string(i) + "," + std::to_string(w) + "," +
             std::to_string(m) + "\n";
      }
    }
    Sink(o, out).Write(s);
    return kExitOk;
  }
  Json j;
  j["count"] = stable.size();
  j["marriages"] = Json::array();
  for (const auto& mu : stable) j["marriages"].push_back(MarriageToJson(mu));
  Sink(o, out).Write(Line(j));
  return kExitOk;
}

int CmdVerify(const Options& o, std::ostream& out) {
  const auto market = RequireMarket(o);
  if (o.marriage.empty()) throw UsageError("--marriage is required");
  const auto mu = LoadMarriage(o.marriage);
  EmbeddingCertificate cert;
  if (!o.cert.empty()) cert = ParseCertificate(ReadTextFile(o.cert));

  const auto blocking = BlockingPairs(market, mu);
  const bool stable = IsStable(market, mu);
  std::optional<int> distance;
  try {
    distance = DistanceToStability(market, mu, cert);
  } catch (const CapacityError&) {
  }

  if (Format(o, "json", true) == "csv") {
    Sink(o, out).Write(
        "verdict,blocking_pairs,distance\n" +
        std::string(stable ? "stable" : "unstable") + "," +
        std::to_string(blocking.size()) + "," +
        (distance ? std::to_string(*distance) : std::string()) + "\n");
    return kExitOk;
  }
  Json j;
  j["verdict"] = stable ? "stable" : "unstable";
  j["blocking_pairs"] = Json::array();
  for (const auto& [w, m] : blocking) j["blocking_pairs"].push_back({w, m});
  j["distance"] = distance ? Json(*distance) : Json(nullptr);
  Sink(o, out).Write(Line(j));
  return kExitOk;
}

// --- protocol ---------------------------------------------------------------

EstimatorParams EstimatorFrom(const Options& o) {
  EstimatorParams p;
  p.epsilon = o.epsilon.value_or(p.epsilon);
  p.delta = o.delta.value_or(p.delta);
  p.failure_prob = o.failure_prob.value_or(p.failure_prob);
  return p;
}

int CmdProtocol(const Options& o, std::ostream& out) {
  const bool csv = Format(o, "json", true) == "csv";
  ProtocolRun run;
  std::optional<bool> correct;
  int n = 0;

  if (o.name == "disj-decider") {
    if (o.n < 1) throw UsageError("--n is required");
    const auto p = HighMidLowParams::Make(o.n, o.delta.value_or(0.5));
    Rng rng(DeriveSeed(o.seed, 1));
    const auto d = ResolveDisj(o, p.domain(), rng);
    run = RunDisjDecider(d, p, GsProtocol(), o.epsilon.value_or(0.2), o.seed);
    correct = run.output == ProtocolOutput(d.disj());
    n = o.n;
  } else if (o.name == "naive-verify" || o.name == "gs" ||
             o.name == "estimator") {
    const auto market = RequireMarket(o);
    n = market.n();
    const Marriage mu = o.marriage.empty() ? Marriage::Identity(n)
                                           : LoadMarriage(o.marriage);
    if (o.name == "naive-verify") {
      run = RunTwoParty(NaiveStabilityProtocol(mu), market, o.seed);
      correct = run.output ==
                ProtocolOutput(IsStable(market, mu) ? StabilityVerdict::kStable
                                                    : StabilityVerdict::kUnstable);
    } else if (o.name == "gs") {
      run = RunTwoParty(GsProtocol(), market, o.seed);
      correct = run.output == ProtocolOutput(DeferredAcceptance(market));
    } else {
      const auto p = EstimatorFrom(o);
      run = RunTwoParty(BlockingFractionEstimator(mu, p), market, o.seed);
      const double fraction =
          static_cast<double>(BlockingPairs(market, mu).size()) / (n * n);
      if (fraction >= p.epsilon) {
        correct = run.output == ProtocolOutput(FractionVerdict::kAtLeast);
      } else if (fraction <= p.epsilon - p.delta) {
        correct = run.output == ProtocolOutput(FractionVerdict::kAtMost);
      }
    }
  } else {
    throw UsageError("unknown protocol: " + o.name);
  }

  if (!o.transcript.empty()) WriteTextFile(o.transcript, run.transcript.Dump());
  const Json record = RunRecord(o.name, n, o.seed, run, correct);
  if (csv) {
    Sink(o, out).Write(
        "protocol,n,seed,bits,output,correct\n" + o.name + "," +
        std::to_string(n) + "," + std::to_string(o.seed) + "," +
        std::to_string(run.transcript.total_bits()) + "," +
        CsvField(record["output"].dump()) + "," +
        (correct ? (*correct ? "true" : "false") : "") + "\n");
  } else {
    Sink(o, out).Write(Line(record));
  }
  return kExitOk;
}

// --- sweep ------------------------------------------------------------------

int CmdSweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.n_list = o.n_list;
  spec.trials = o.trials;
  spec.seed = o.seed;
  spec.target = o.target;
  for (const auto& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects key=value, got " + kv);
    }
    spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const bool csv = Format(o, "csv", true) == "csv";
  const auto rows = RunSweep(spec, o.threads);

  if (csv) {
    Sink(o, out).Write(SweepCsv(rows));
  } else {
    Json j = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["n"] = r.n;
      row["trial"] = r.trial;
      row["seed"] = r.seed;
      row["target"] = r.target;
      row["bits"] = r.bits ? Json(*r.bits) : Json(nullptr);
      row["queries_w"] = r.queries_w ? Json(*r.queries_w) : Json(nullptr);
      row["queries_m"] = r.queries_m ? Json(*r.queries_m) : Json(nullptr);
      row["correct"] = r.error.empty() ? Json(r.correct) : Json("error");
      j.push_back(row);
    }
    Sink(o, out).Write(Line(j));
  }

  const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) {
    return !r.error.empty();
  });
  if (failed > 0) {
    const auto first = std::find_if(rows.begin(), rows.end(),
                                    [](const auto& r) { return !r.error.empty(); });
    err << "error: sweep: " << failed << " trial(s) failed; first at n="
        << first->n << " trial=" << first->trial << ": " << first->error
        << "\n";
    return kExitFailure;
  }
  if (spec.target == "optimality-check") {
    for (const auto& r : rows) {
      if (!r.correct) {
        throw ContractViolation("optimality accounting failed at n=" +
                                std::to_string(r.n) +
                                " trial=" + std::to_string(r.trial));
      }
    }
  }
  return kExitOk;
}

// --- optimality-check -------------------------------------------------------

int CmdOptimality(const Options& o, std::ostream& out) {
  MarriageMarket market = [&] {
    if (!o.market.empty()) return LoadMarket(o.market);
    Rng rng(o.seed);
    return RandomFullMarket(o.n > 0 ? o.n : 8, rng);
  }();
  VerifierOptions vo;
  vo.shuffle_seed = o.shuffle_seed;
  const auto report = OptimalityCheck(market, vo);
  if (Format(o, "json", true) == "csv") {
    Sink(o, out).Write("R,Q,verifierW,holds\n" +
                       std::to_string(report.rejections) + "," +
                       std::to_string(report.evidence) + "," +
                       std::to_string(report.verifier_women) + "," +
                       (report.holds ? "true" : "false") + "\n");
  } else {
    Sink(o, out).Write(Line(OptimalityReportToJson(report)));
  }
  if (!report.holds) {
    throw ContractViolation("rejections are not covered by the evidence set");
  }
  return kExitOk;
}

std::string OneLine(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Stable marriage lab: instances, protocols and query models",
               "stablelab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Base seed");
  app.add_option("--out", o.out, "Write primary output to this file");
  app.add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* gen = app.add_subcommand("generate", "Write a market file");
  gen->add_option("--kind", o.kind,
                  "random, verify-embed, partial-embed, hml, is-single, "
                  "complete, unique-full, negate-single, lift-married");
  gen->add_option("--n", o.n, "Participants per side");
  gen->add_option("--delta", o.delta, "High-tier fraction for hml");
  gen->add_option("--disj", o.disj,
                  "zeros, unique:i,j, random, random-disjoint, random-unique");
  gen->add_option("--disj-file", o.disj_file, "DISJ instance JSON");
  gen->add_option("--market", o.market, "Input market for derived kinds");
  gen->add_option("--woman", o.woman, "Woman for negate-single/lift-married");
  gen->add_option("--side", o.side, "is-single side")
      ->check(CLI::IsMember({"women", "men"}));
  gen->add_option("--order", o.order, "Padding order for complete")
      ->check(CLI::IsMember({"asc", "desc", "shuffled"}));
  gen->add_option("--model", o.model, "random: full or partial lists")
      ->check(CLI::IsMember({"full", "partial"}));
  gen->add_option("--keep", o.keep, "random partial: keep probability");
  gen->add_option("--cert", o.cert, "Write the embedding certificate here");
  gen->add_flag("--check", o.check, "Verify the certificate before writing");

  auto* solve = app.add_subcommand("solve", "M-optimal stable marriage");
  solve->add_option("--market", o.market)->required();

  auto* enumerate = app.add_subcommand("enumerate", "All stable marriages");
  enumerate->add_option("--market", o.market)->required();

  auto* verify = app.add_subcommand("verify", "Stability of a marriage");
  verify->add_option("--market", o.market)->required();
  verify->add_option("--marriage", o.marriage)->required();
  verify->add_option("--cert", o.cert, "Certificate sidecar");

  auto* proto = app.add_subcommand("protocol", "Run a two-party protocol");
  proto->add_option("--name", o.name,
                    "naive-verify, gs, estimator, disj-decider")
      ->required();
  proto->add_option("--market", o.market);
  proto->add_option("--marriage", o.marriage, "Defaults to the identity");
  proto->add_option("--epsilon", o.epsilon);
  proto->add_option("--delta", o.delta,
                    "estimator gap, or high-tier fraction for disj-decider");
  proto->add_option("--failure-prob", o.failure_prob);
  proto->add_option("--n", o.n, "disj-decider market size");
  proto->add_option("--disj", o.disj);
  proto->add_option("--disj-file", o.disj_file);
  proto->add_option("--transcript", o.transcript, "Dump the transcript here");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep as CSV");
  sweep->add_option("--target", o.target)->required();
  sweep->add_option("--n", o.n_list, "Comma-separated sizes")
      ->delimiter(',')
      ->required();
  sweep->add_option("--trials", o.trials);
  sweep->add_option("--param", o.params, "key=value, repeatable");
  sweep->add_option("--threads", o.threads);

  auto* opt = app.add_subcommand("optimality-check",
                                 "Deferred-acceptance query accounting");
  opt->add_option("--market", o.market);
  opt->add_option("--n", o.n, "Random market size when no --market");
  opt->add_option("--shuffle-seed", o.shuffle_seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return CmdGenerate(o, out);
    if (solve->parsed()) return CmdSolve(o, out);
    if (enumerate->parsed()) return CmdEnumerate(o, out);
    if (verify->parsed()) return CmdVerify(o, out);
    if (proto->parsed()) return CmdProtocol(o, out);
    if (sweep->parsed()) return CmdSweep(o, out, err);
    if (opt->parsed()) return CmdOptimality(o, out);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "error: usage: " << OneLine(e.what()) << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << OneLine(e.what()) << "\n";
    if (e.kind() == "capacity") return kExitCapacity;
    if (e.kind() == "contract-violation") return kExitContract;
    if (e.kind() == "protocol" || e.kind() == "isolation") return kExitFailure;
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: internal: " << OneLine(e.what()) << "\n";
    return kExitFailure;
  }
}

}  // namespace stablelab::cli
