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

#include "stablelab/query/adapter.hpp"

#include <memory>
#include <utility>
#include <vector>

#include "stablelab/errors.hpp"

namespace stablelab {
namespace {

// Thrown through the strategy when it asks a query with no known answer yet.
struct Pending {
  Query query;
};

class ReplayOracle : public PreferenceOracle {
 public:
  // `local`, when set, answers its own side's queries directly.
  ReplayOracle(int n, const std::vector<int>& answers, const PartyView* local)
      : n_(n), answers_(answers), local_(local) {}

  int n() const override { return n_; }

  int Ask(const Query& q) override {
    const Side side = AnsweringSide(q);
    if (local_ != nullptr && side == local_->side()) {
      return AnswerFromProfile(local_->own(),
                               local_->model() == ListModel::kFull, q);
    }
    if (pos_ < answers_.size()) return answers_[pos_++];
    throw Pending{q};
  }

 private:
  int n_;
  const std::vector<int>& answers_;
  const PartyView* local_;
  std::size_t pos_ = 0;
};

struct Step {
  std::optional<ProtocolOutput> done;
  std::optional<Query> pending;
};

Step Replay(const QueryStrategy& strategy, int n,
            const std::vector<int>& answers, const PartyView* local) {
  ReplayOracle oracle(n, answers, local);
  try {
    return {strategy(oracle), std::nullopt};
  } catch (const Pending& p) {
    return {std::nullopt, p.query};
  }
}

void RequireBoolean(const Query& q) {
  if (!IsBoolean(q)) {
    throw ModelViolation("non-Boolean query cannot be sent as one bit: " +
                         Describe(q));
  }
}

Party PartyFor(Side s) { return s == Side::kWoman ? Party::kAlice : Party::kBob; }

BitString Bit(int answer) { return answer != 0 ? "1" : "0"; }

int ParseBit(const BitString& bits) {
  if (bits != "0" && bits != "1") {
    throw ProtocolFault("expected a single answer bit");
  }
  return bits == "1" ? 1 : 0;
}

class SymmetricParty : public PartyProgram {
 public:
  SymmetricParty(PartyView& view, QueryStrategy strategy)
      : view_(view), strategy_(std::move(strategy)) {}

  std::optional<Party> next_speaker() override {
    Refresh();
    if (step_.done) return std::nullopt;
    RequireBoolean(*step_.pending);
    return PartyFor(AnsweringSide(*step_.pending));
  }

  BitString speak() override {
    Refresh();
    const int answer = AnswerFromProfile(
        view_.own(), view_.model() == ListModel::kFull, *step_.pending);
    answers_.push_back(answer);
    dirty_ = true;
    return Bit(answer);
  }

  void hear(const BitString& bits) override {
    answers_.push_back(ParseBit(bits));
    dirty_ = true;
  }

  ProtocolOutput output() const override {
    return step_.done.value_or(ProtocolOutput{});
  }

 private:
  void Refresh() {
    if (!dirty_) return;
    step_ = Replay(strategy_, view_.n(), answers_, nullptr);
    dirty_ = false;
  }

  PartyView& view_;
  QueryStrategy strategy_;
  std::vector<int> answers_;
  Step step_;
  bool dirty_ = true;
};

struct Board {
  std::optional<Query> pending;
  std::optional<ProtocolOutput> output;
};

// Hands the same board to the two parties of one run, whichever is built
// first.
struct BoardSlot {
  std::shared_ptr<Board> waiting;

  std::shared_ptr<Board> Acquire() {
    if (waiting) return std::exchange(waiting, nullptr);
    waiting = std::make_shared<Board>();
    return waiting;
  }
  void Abandon(const std::shared_ptr<Board>& b) {
    if (waiting == b) waiting.reset();
  }
};

class HomeParty : public PartyProgram {
 public:
  HomeParty(PartyView& view, QueryStrategy strategy,
            const std::shared_ptr<BoardSlot>& slot)
      : view_(view), strategy_(std::move(strategy)), board_(slot->Acquire()) {
    try {
      Advance();
    } catch (...) {
      slot->Abandon(board_);
      throw;
    }
  }

  std::optional<Party> next_speaker() override {
    if (board_->output) return std::nullopt;
    return Other(view_.party());
  }

  BitString speak() override {
    throw ProtocolFault("the home party never transmits");
  }

  void hear(const BitString& bits) override {
    answers_.push_back(ParseBit(bits));
    Advance();
  }

  ProtocolOutput output() const override {
    return board_->output.value_or(ProtocolOutput{});
  }

 private:
  void Advance() {
    Step step = Replay(strategy_, view_.n(), answers_, &view_);
    if (step.done) {
      board_->pending.reset();
      board_->output = std::move(step.done);
      return;
    }
    RequireBoolean(*step.pending);
    board_->pending = std::move(step.pending);
  }

  PartyView& view_;
  QueryStrategy strategy_;
  std::shared_ptr<Board> board_;
  std::vector<int> answers_;
};

class AwayParty : public PartyProgram {
 public:
  AwayParty(PartyView& view, const std::shared_ptr<BoardSlot>& slot)
      : view_(view), board_(slot->Acquire()) {}

  std::optional<Party> next_speaker() override {
    if (board_->output) return std::nullopt;
    return view_.party();
  }

  BitString speak() override {
    if (!board_->pending) throw ProtocolFault("no pending query");
    return Bit(AnswerFromProfile(view_.own(),
                                 view_.model() == ListModel::kFull,
                                 *board_->pending));
  }

  void hear(const BitString&) override {
    throw ProtocolFault("the home party never transmits");
  }

  ProtocolOutput output() const override {
    return board_->output.value_or(ProtocolOutput{});
  }

 private:
  PartyView& view_;
  std::shared_ptr<Board> board_;
};

}  // namespace

TwoPartyProtocol AdaptStrategy(std::string name, QueryStrategy strategy,
                               std::optional<Side> home) {
  TwoPartyProtocol p;
  p.name = std::move(name);
  if (!home) {
    auto make = [strategy](PartyView& view) -> std::unique_ptr<PartyProgram> {
      return std::make_unique<SymmetricParty>(view, strategy);
    };
    p.make_alice = make;
    p.make_bob = make;
    return p;
  }
  auto slot = std::make_shared<BoardSlot>();
  auto make = [strategy, slot,
               home = *home](PartyView& view) -> std::unique_ptr<PartyProgram> {
    if (view.side() == home) {
      return std::make_unique<HomeParty>(view, strategy, slot);
    }
    return std::make_unique<AwayParty>(view, slot);
  };
  p.make_alice = make;
  p.make_bob = make;
  return p;
}

QueryStrategy DaStrategy() {
  return [](PreferenceOracle& oracle) -> ProtocolOutput {
    return DaInstrumented(oracle).marriage;
  };
}

QueryStrategy VerifierStrategy(Marriage mu, VerifierOptions options) {
  return [mu = std::move(mu), options](PreferenceOracle& oracle)
             -> ProtocolOutput {
    return ComparisonVerifier(oracle, mu, options).verdict;
  };
}

}  // namespace stablelab
