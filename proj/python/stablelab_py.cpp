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

// Python bindings. Marriages cross the boundary as lists of (woman, man)
// tuples; structured results come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stablelab/embed/certificate.hpp"
#include "stablelab/embed/disj.hpp"
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

namespace py = pybind11;
using namespace stablelab;

namespace {

using Pairs = std::vector<Couple>;

Marriage ToMarriage(int n, const Pairs& pairs) { return Marriage(n, pairs); }

py::object FromJson(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ListModel ParseModel(const std::string& s) {
  if (s == "full") return ListModel::kFull;
  if (s == "partial") return ListModel::kPartial;
  throw ParameterError("model must be full or partial");
}

MarriageMarket MakeMarket(const std::string& model,
                          std::vector<std::vector<int>> women,
                          std::vector<std::vector<int>> men) {
  const int n = static_cast<int>(women.size());
  return MarriageMarket(ParseModel(model), PreferenceProfile(n, std::move(women)),
                        PreferenceProfile(n, std::move(men)));
}

py::dict RunToDict(const ProtocolRun& run) {
  py::dict d;
  d["bits"] = run.transcript.total_bits();
  d["output"] = FromJson(OutputToJson(run.output));
  d["transcript"] = run.transcript.Dump();
  return d;
}

py::dict RunProtocol(const std::string& name, const MarriageMarket& market,
                     std::uint64_t seed, std::optional<Pairs> marriage,
                     double epsilon, double delta, double failure_prob) {
  const int n = market.n();
  const Marriage mu =
      marriage ? ToMarriage(n, *marriage) : Marriage::Identity(n);
  if (name == "naive-verify") {
    return RunToDict(RunTwoParty(NaiveStabilityProtocol(mu), market, seed));
  }
  if (name == "gs") return RunToDict(RunTwoParty(GsProtocol(), market, seed));
  if (name == "estimator") {
    return RunToDict(RunTwoParty(
        BlockingFractionEstimator(mu, {epsilon, delta, failure_prob}), market,
        seed));
  }
  throw ParameterError("unknown protocol: " + name);
}

}  // namespace

PYBIND11_MODULE(stablelab, m) {
  m.doc() = "Stable marriage markets, DISJ embeddings, protocols and queries";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (e.kind() + ": " + e.what()).c_str());
    }
  });

  py::class_<MarriageMarket>(m, "Market")
      .def(py::init(&MakeMarket), py::arg("model"), py::arg("women"),
           py::arg("men"))
      .def_property_readonly("n", &MarriageMarket::n)
      .def_property_readonly("model",
                             [](const MarriageMarket& mk) {
                               return std::string(ListModelName(mk.model()));
                             })
      .def_property_readonly("women",
                             [](const MarriageMarket& mk) { return mk.women().lists(); })
      .def_property_readonly("men",
                             [](const MarriageMarket& mk) { return mk.men().lists(); })
      .def("to_json", &SerializeMarket)
      .def_static("from_json", &ParseMarket)
      .def("__eq__", [](const MarriageMarket& a, const MarriageMarket& b) {
        return SerializeMarket(a) == SerializeMarket(b);
      });

  m.def(
      "random_market",
      [](int n, std::uint64_t seed, const std::string& model) {
        Rng rng(seed);
        return ParseModel(model) == ListModel::kFull
                   ? RandomFullMarket(n, rng)
                   : RandomPartialMarket(n, rng);
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("model") = "full");

  m.def(
      "deferred_acceptance",
      [](const MarriageMarket& mk) { return DeferredAcceptance(mk).pairs(); },
      "M-optimal stable marriage as (woman, man) pairs");
  m.def("is_stable", [](const MarriageMarket& mk, const Pairs& pairs) {
    return IsStable(mk, ToMarriage(mk.n(), pairs));
  });
  m.def("blocking_pairs", [](const MarriageMarket& mk, const Pairs& pairs) {
    return BlockingPairs(mk, ToMarriage(mk.n(), pairs));
  });
  m.def("enumerate_stable", [](const MarriageMarket& mk) {
    std::vector<Pairs> out;
    for (const auto& mu : EnumerateStable(mk)) out.push_back(mu.pairs());
    return out;
  });
  m.def("divorce_distance", [](int n, const Pairs& a, const Pairs& b) {
    return DivorceDistance(ToMarriage(n, a), ToMarriage(n, b), n);
  });
  m.def("distance_to_stability", [](const MarriageMarket& mk, const Pairs& pairs) {
    return DistanceToStability(mk, ToMarriage(mk.n(), pairs));
  });

  py::class_<DisjInstance>(m, "Disj")
      .def_static("from_json", &ParseDisj)
      .def_static(
          "offdiag",
          [](int n, const Pairs& x, const Pairs& y) {
            auto d = DisjInstance::Zeros(DisjDomain::OffDiagonal(n));
            for (const auto& [i, j] : x) d.x.set(i, j, true);
            for (const auto& [i, j] : y) d.y.set(i, j, true);
            return d;
          },
          py::arg("n"), py::arg("x") = Pairs{}, py::arg("y") = Pairs{})
      .def_static(
          "grid",
          [](int k, const Pairs& x, const Pairs& y) {
            auto d = DisjInstance::Zeros(DisjDomain::Grid(k));
            for (const auto& [i, j] : x) d.x.set(i, j, true);
            for (const auto& [i, j] : y) d.y.set(i, j, true);
            return d;
          },
          py::arg("k"), py::arg("x") = Pairs{}, py::arg("y") = Pairs{})
      .def("disj", &DisjInstance::disj)
      .def("intersections", &DisjInstance::intersections)
      .def("to_json", &SerializeDisj);

  m.def("embed_verify_stability", &EmbedVerifyStability);
  m.def("embed_find_stable_partial", &EmbedFindStablePartial);
  m.def("embed_unique_full", &EmbedUniqueFull);
  m.def(
      "complete_preferences",
      [](const MarriageMarket& mk, const std::string& order, std::uint64_t seed) {
        PaddingOrder o = PaddingOrder::kAscending;
        if (order == "desc") o = PaddingOrder::kDescending;
        if (order == "shuffled") o = PaddingOrder::kShuffled;
        return CompletePreferences(mk, o, seed);
      },
      py::arg("market"), py::arg("order") = "asc", py::arg("seed") = 0);
  m.def(
      "embed_is_single",
      [](const DisjInstance& d, const std::string& side) {
        const auto e =
            EmbedIsSingle(d, side == "men" ? Side::kMan : Side::kWoman);
        return py::make_tuple(e.market, e.distinguished.index);
      },
      py::arg("disj"), py::arg("side") = "women");
  m.def("lift_single_to_married", [](const MarriageMarket& mk, int woman) {
    const auto l = LiftSingleToMarried(mk, woman);
    return py::make_tuple(l.market, l.couple);
  });
  m.def("negate_single", [](const MarriageMarket& mk, int woman) {
    const auto s = NegateSingle(mk, woman);
    return py::make_tuple(s.market, s.new_man);
  });

  m.def("build_high_mid_low", [](int n, double delta, const DisjInstance& d) {
    return BuildHighMidLow(HighMidLowParams::Make(n, delta), d);
  });
  m.def("canonical_mu1", [](int n) { return CanonicalMu1(n).pairs(); });
  m.def("canonical_mu0", [](int n, double delta, int alpha, int beta) {
    return CanonicalMu0(HighMidLowParams::Make(n, delta), alpha, beta).pairs();
  });
  m.def("choose_delta", &ChooseDelta);

  m.def("run_protocol", &RunProtocol, py::arg("name"), py::arg("market"),
        py::arg("seed") = 0, py::arg("marriage") = py::none(),
        py::arg("epsilon") = 0.2, py::arg("delta") = 0.1,
        py::arg("failure_prob") = 0.05);
  m.def(
      "run_disj_decider",
      [](const DisjInstance& d, int n, double delta, double epsilon,
         std::uint64_t seed) {
        return RunToDict(RunDisjDecider(d, HighMidLowParams::Make(n, delta),
                                        GsProtocol(), epsilon, seed));
      },
      py::arg("disj"), py::arg("n"), py::arg("delta") = 0.5,
      py::arg("epsilon") = 0.2, py::arg("seed") = 0);

  m.def("da_instrumented", [](const MarriageMarket& mk) {
    const auto r = DaInstrumented(mk);
    py::dict d;
    d["marriage"] = r.marriage.pairs();
    d["rejections"] = Pairs(r.rejections.begin(), r.rejections.end());
    d["women_queries"] = r.log.women_side_count();
    d["men_queries"] = r.log.men_side_count();
    return d;
  });
  m.def("comparison_verifier", [](const MarriageMarket& mk, const Pairs& pairs) {
    const auto r = ComparisonVerifier(mk, ToMarriage(mk.n(), pairs));
    py::dict d;
    d["stable"] = r.verdict == StabilityVerdict::kStable;
    d["women_queries"] = r.log.women_side_count();
    d["men_queries"] = r.log.men_side_count();
    d["evidence"] = r.evidence.size();
    return d;
  });
  m.def("optimality_check", [](const MarriageMarket& mk) {
    return FromJson(OptimalityReportToJson(OptimalityCheck(mk)));
  });

  m.def(
      "sweep",
      [](const std::string& target, std::vector<int> n_list, int trials,
         std::uint64_t seed, std::map<std::string, std::string> params) {
        SweepSpec spec{std::move(n_list), trials, seed, target,
                       std::move(params)};
        return SweepCsv(RunSweep(spec));
      },
      py::arg("target"), py::arg("n_list"), py::arg("trials") = 1,
      py::arg("seed") = 0,
      py::arg("params") = std::map<std::string, std::string>{},
      "Runs a sweep and returns its CSV text");
}
