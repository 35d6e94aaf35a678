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

#include "stablelab/protocol/protocols.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "stablelab/errors.hpp"
#include "stablelab/market/distance.hpp"
#include "stablelab/market/stability.hpp"

namespace stablelab {
namespace {

void RequireSize(const PartyView& view, const Marriage& mu) {
  if (mu.n() != view.n()) {
    throw DomainError("marriage is over n=" + std::to_string(mu.n()) +
                      ", market has n=" + std::to_string(view.n()));
  }
}

// --- constant / echo --------------------------------------------------------

class ConstantParty : public PartyProgram {
 public:
  explicit ConstantParty(int value) : value_(value) {}
  std::optional<Party> next_speaker() override { return std::nullopt; }
  BitString speak() override { return {}; }
  void hear(const BitString&) override {}
  ProtocolOutput output() const override { return value_; }

 private:
  int value_;
};

class EchoParty : public PartyProgram {
 public:
  explicit EchoParty(PartyView& view) : view_(view) {}
  std::optional<Party> next_speaker() override {
    if (done_) return std::nullopt;
    return Party::kAlice;
  }
  BitString speak() override {
    const auto& list = view_.profile(Side::kWoman).list(1);
    bit_ = !list.empty() && list.front() == 1;
    done_ = true;
    return bit_ ? "1" : "0";
  }
  void hear(const BitString& bits) override {
    bit_ = bits == "1";
    done_ = true;
  }
  ProtocolOutput output() const override { return bit_ ? 1 : 0; }

 private:
  PartyView& view_;
  bool done_ = false;
  bool bit_ = false;
};

// --- naive verification -----------------------------------------------------

// Per-pair local bit shared by both sides of the naive protocol.
bool LocalPairBit(const PartyView& view, const Marriage& mu, int w, int m) {
  const Side side = view.side();
  const auto& own = view.profile(side);
  const int self = side == Side::kWoman ? w : m;
  const int other = side == Side::kWoman ? m : w;
  if (mu.husband(w) == m) return !own.lists_target(self, other);
  return WouldDeviate(own, side, mu, self, other);
}

class NaiveParty : public PartyProgram {
 public:
  NaiveParty(PartyView& view, Marriage mu) : view_(view), mu_(std::move(mu)) {
    RequireSize(view_, mu_);
  }

  std::optional<Party> next_speaker() override {
    switch (step_) {
      case 0:
        return Party::kBob;
      case 1:
        return Party::kAlice;
      default:
        return std::nullopt;
    }
  }

  BitString speak() override {
    const int n = view_.n();
    if (step_ == 0) {
      BitString bits;
      bits.reserve(static_cast<std::size_t>(n) * n);
      for (int w = 1; w <= n; ++w) {
        for (int m = 1; m <= n; ++m) {
          bits += LocalPairBit(view_, mu_, w, m) ? '1' : '0';
        }
      }
      step_ = 1;
      return bits;
    }
    step_ = 2;
    return unstable_ ? "1" : "0";
  }

  void hear(const BitString& bits) override {
    const int n = view_.n();
    if (step_ == 0) {
      if (bits.size() != static_cast<std::size_t>(n) * n) {
        throw ProtocolFault("naive verification: wrong message length");
      }
      for (int w = 1; w <= n && !unstable_; ++w) {
        for (int m = 1; m <= n; ++m) {
          const bool bob = bits[(w - 1) * n + (m - 1)] == '1';
          const bool alice = LocalPairBit(view_, mu_, w, m);
          const bool couple = mu_.husband(w) == m;
          if (couple ? (alice || bob) : (alice && bob)) {
            unstable_ = true;
            break;
          }
        }
      }
      step_ = 1;
      return;
    }
    unstable_ = bits == "1";
    step_ = 2;
  }

  ProtocolOutput output() const override {
    return unstable_ ? StabilityVerdict::kUnstable : StabilityVerdict::kStable;
  }

 private:
  PartyView& view_;
  Marriage mu_;
  int step_ = 0;
  bool unstable_ = false;
};

// --- deferred acceptance ----------------------------------------------------

class GsParty : public PartyProgram {
 public:
  explicit GsParty(PartyView& view)
      : view_(view),
        width_(BitWidth(view.n())),
        fiance_(view.n() + 1, 0),
        bride_(view.n() + 1, 0),
        next_(view.n() + 1, 0) {
    if (view_.model() != ListModel::kFull || !view_.own().is_full()) {
      throw DomainError("the GS protocol needs full preference lists");
    }
  }

  std::optional<Party> next_speaker() override {
    if (awaiting_reply_) return Party::kAlice;
    if (FreeMan() == 0) return std::nullopt;
    return Party::kBob;
  }

  BitString speak() override {
    if (!awaiting_reply_) {
      // Bob: the free man proposes to his next woman.
      const int m = FreeMan();
      const int w = view_.profile(Side::kMan).list(m)[next_[m]++];
      Propose(m, w);
      return EncodeUint(w - 1, width_);
    }
    // Alice: accept iff the woman is free or prefers the proposer.
    const int current = fiance_[woman_];
    const bool accept =
        current == 0 ||
        view_.profile(Side::kWoman).prefers(woman_, proposer_, current);
    Resolve(accept);
    return accept ? "1" : "0";
  }

  void hear(const BitString& bits) override {
    if (!awaiting_reply_) {
      const int w = static_cast<int>(DecodeUint(bits, 0, width_)) + 1;
      if (w > view_.n() || bits.size() != static_cast<std::size_t>(width_)) {
        throw ProtocolFault("GS: malformed proposal");
      }
      Propose(FreeMan(), w);
      return;
    }
    if (bits.size() != 1) throw ProtocolFault("GS: malformed reply");
    Resolve(bits == "1");
  }

  ProtocolOutput output() const override {
    Marriage mu(view_.n());
    for (int w = 1; w <= view_.n(); ++w) {
      if (fiance_[w] != 0) mu.marry(w, fiance_[w]);
    }
    return mu;
  }

 private:
  int FreeMan() const {
    for (int m = 1; m <= view_.n(); ++m) {
      if (bride_[m] == 0) return m;
    }
    return 0;
  }

  void Propose(int m, int w) {
    proposer_ = m;
    woman_ = w;
    awaiting_reply_ = true;
  }

  void Resolve(bool accept) {
    if (accept) {
      const int old = fiance_[woman_];
      if (old != 0) bride_[old] = 0;
      fiance_[woman_] = proposer_;
      bride_[proposer_] = woman_;
    }
    awaiting_reply_ = false;
  }

  PartyView& view_;
  int width_;
  std::vector<int> fiance_;  // by woman
  std::vector<int> bride_;   // by man
  std::vector<int> next_;    // Bob only: position on each man's list
  bool awaiting_reply_ = false;
  int proposer_ = 0;
  int woman_ = 0;
};

// --- blocking-fraction estimator ---------------------------------------------

class EstimatorParty : public PartyProgram {
 public:
  EstimatorParty(PartyView& view, Marriage mu, const EstimatorParams& params)
      : view_(view), mu_(std::move(mu)), params_(params) {
    RequireSize(view_, mu_);
    if (!mu_.is_perfect()) {
      throw DomainError("the estimator needs a perfect marriage");
    }
    const int k = EstimatorSampleCount(params_);
    const int n = view_.n();
    samples_.reserve(k);
    for (int s = 0; s < k; ++s) {
      const int cell = view_.coins().UniformInt(0, n * n - 1);
      samples_.emplace_back(cell / n + 1, cell % n + 1);
    }
  }

  std::optional<Party> next_speaker() override {
    switch (step_) {
      case 0:
        return Party::kAlice;
      case 1:
        return Party::kBob;
      default:
        return std::nullopt;
    }
  }

  BitString speak() override {
    if (step_ == 0) {
      BitString bits;
      bits.reserve(samples_.size());
      const auto& women = view_.profile(Side::kWoman);
      for (const auto& [w, m] : samples_) {
        bits += WouldDeviate(women, Side::kWoman, mu_, w, m) ? '1' : '0';
      }
      step_ = 1;
      return bits;
    }
    step_ = 2;
    return at_least_ ? "1" : "0";
  }

  void hear(const BitString& bits) override {
    if (step_ == 0) {
      if (bits.size() != samples_.size()) {
        throw ProtocolFault("estimator: wrong message length");
      }
      const auto& men = view_.profile(Side::kMan);
      int count = 0;
      for (std::size_t s = 0; s < samples_.size(); ++s) {
        const auto [w, m] = samples_[s];
        if (bits[s] == '1' && WouldDeviate(men, Side::kMan, mu_, m, w)) {
          ++count;
        }
      }
      const double fraction = static_cast<double>(count) / samples_.size();
      at_least_ = fraction >= params_.epsilon - params_.delta / 2;
      step_ = 1;
      return;
    }
    at_least_ = bits == "1";
    step_ = 2;
  }

  ProtocolOutput output() const override {
    return at_least_ ? FractionVerdict::kAtLeast : FractionVerdict::kAtMost;
  }

 private:
  PartyView& view_;
  Marriage mu_;
  EstimatorParams params_;
  std::vector<Couple> samples_;
  int step_ = 0;
  bool at_least_ = false;
};

// --- DISJ decider -------------------------------------------------------------

class DisjDeciderParty : public PartyProgram {
 public:
  DisjDeciderParty(std::unique_ptr<PartyProgram> inner, int n, double epsilon)
      : inner_(std::move(inner)), n_(n), epsilon_(epsilon) {}

  std::optional<Party> next_speaker() override {
    return inner_->next_speaker();
  }
  BitString speak() override { return inner_->speak(); }
  void hear(const BitString& bits) override { inner_->hear(bits); }

  ProtocolOutput output() const override {
    const auto out = inner_->output();
    const auto* mu = std::get_if<Marriage>(&out);
    if (mu == nullptr) {
      throw ProtocolFault("DISJ decider: finder did not output a marriage");
    }
    const int d = DivorceDistance(*mu, CanonicalMu1(n_), n_);
    return IsApproximatelyStable(d, epsilon_, n_) ? 1 : 0;
  }

 private:
  std::unique_ptr<PartyProgram> inner_;
  int n_;
  double epsilon_;
};

}  // namespace

TwoPartyProtocol ConstantProtocol(int value) {
  auto make = [value](PartyView&) -> std::unique_ptr<PartyProgram> {
    return std::make_unique<ConstantParty>(value);
  };
  return {"constant", make, make};
}

TwoPartyProtocol EchoBitProtocol() {
  auto make = [](PartyView& v) -> std::unique_ptr<PartyProgram> {
    return std::make_unique<EchoParty>(v);
  };
  return {"echo", make, make};
}

TwoPartyProtocol NaiveStabilityProtocol(const Marriage& mu) {
  auto make = [mu](PartyView& v) -> std::unique_ptr<PartyProgram> {
    return std::make_unique<NaiveParty>(v, mu);
  };
  return {"naive-verify", make, make};
}

TwoPartyProtocol GsProtocol() {
  auto make = [](PartyView& v) -> std::unique_ptr<PartyProgram> {
    return std::make_unique<GsParty>(v);
  };
  return {"gs", make, make};
}

int EstimatorSampleCount(const EstimatorParams& p) {
  if (!(p.delta > 0) || p.epsilon < p.delta || p.epsilon > 1) {
    throw ParameterError("estimator needs 1 >= epsilon >= delta > 0");
  }
  if (!(p.failure_prob > 0) || !(p.failure_prob < 1)) {
    throw ParameterError("failure probability must lie in (0, 1)");
  }
  const double half = p.delta / 2;
  return static_cast<int>(
      std::ceil(std::log(2.0 / p.failure_prob) / (2 * half * half)));
}

TwoPartyProtocol BlockingFractionEstimator(const Marriage& mu,
                                           const EstimatorParams& params) {
  EstimatorSampleCount(params);  // validates before any run
  auto make = [mu, params](PartyView& v) -> std::unique_ptr<PartyProgram> {
    return std::make_unique<EstimatorParty>(v, mu, params);
  };
  return {"estimator", make, make};
}

TwoPartyProtocol DisjDeciderProtocol(const HighMidLowParams& p,
                                     const TwoPartyProtocol& finder,
                                     double epsilon) {
  if (!(epsilon >= 0) || !(epsilon < (1 - p.delta()) / 2)) {
    throw ParameterError("DISJ decider needs 0 <= epsilon < (1 - delta)/2");
  }
  const int n = p.n();
  auto wrap = [n, epsilon](PartyFactory inner) {
    return [inner, n, epsilon](PartyView& v) -> std::unique_ptr<PartyProgram> {
      return std::make_unique<DisjDeciderParty>(inner(v), n, epsilon);
    };
  };
  return {"disj-decider", wrap(finder.make_alice), wrap(finder.make_bob)};
}

ProtocolRun RunDisjDecider(const DisjInstance& d, const HighMidLowParams& p,
                           const TwoPartyProtocol& finder, double epsilon,
                           std::uint64_t seed) {
  const auto protocol = DisjDeciderProtocol(p, finder, epsilon);
  if (!(d.domain() == p.domain())) {
    throw DomainError("DISJ instance is not over the high x high grid");
  }
  if (!UniqueIntersection(d)) {
    throw PreconditionError("DISJ instance has two or more common entries");
  }
  const auto women = HighMidLowWomen(p, d.x);
  const auto men = HighMidLowMen(p, d.y);
  return RunTwoParty(protocol, women, men, seed, ListModel::kFull);
}

}  // namespace stablelab
