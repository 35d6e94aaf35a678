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

// Two-party protocol simulator. Alice holds the women's profile, Bob the
// men's. Each party is a program that sees only a PartyView of its own side
// plus a private copy of the public coin stream; everything else it learns
// arrives through metered messages.
//
// The schedule is oblivious: before every step both programs are asked who
// speaks next, and the runner faults if they disagree. When both report
// that the run is over, their outputs must be equal (outputs are common
// knowledge).

#ifndef STABLELAB_PROTOCOL_HARNESS_HPP_
#define STABLELAB_PROTOCOL_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "stablelab/market/market.hpp"
#include "stablelab/market/market_io.hpp"

namespace stablelab {

enum class Party { kAlice, kBob };

// "A" or "B".
const char* PartyTag(Party p);
inline Party Other(Party p) {
  return p == Party::kAlice ? Party::kBob : Party::kAlice;
}

// Payload as a string over {'0', '1'}. No framing bits are added.
using BitString = std::string;

struct Message {
  Party sender;
  BitString bits;
  friend bool operator==(const Message&, const Message&) = default;
};

class Transcript {
 public:
  void append(Message m);
  const std::vector<Message>& messages() const { return messages_; }
  std::int64_t total_bits() const { return total_bits_; }
  // One line per message: "A 0110" / "B 1". Empty messages print the tag
  // followed by a single space.
  std::string Dump() const;

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<Message> messages_;
  std::int64_t total_bits_ = 0;
};

// Fixed-width big-endian binary encoding of value in [0, 2^width).
BitString EncodeUint(std::uint64_t value, int width);
std::uint64_t DecodeUint(const BitString& bits, std::size_t pos, int width);
// ceil(log2(n)) for n >= 1.
int BitWidth(int n);

// Public randomness. Every party receives its own copy built from the same
// seed, so both observe the identical stream as long as they draw in the
// same order.
class PublicCoins {
 public:
  explicit PublicCoins(std::uint64_t seed) : engine_(seed) {}
  // Uniform integer in [lo, hi].
  int UniformInt(int lo, int hi);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// What a party may look at: n, the list model, its own profile and coins.
class PartyView {
 public:
  PartyView(Party party, int n, ListModel model,
            const PreferenceProfile& own, std::uint64_t seed)
      : party_(party), n_(n), model_(model), own_(&own), coins_(seed) {}

  Party party() const { return party_; }
  Side side() const {
    return party_ == Party::kAlice ? Side::kWoman : Side::kMan;
  }
  int n() const { return n_; }
  ListModel model() const { return model_; }
  const PreferenceProfile& own() const { return *own_; }
  // Throws IsolationFault unless `s` is this party's side.
  const PreferenceProfile& profile(Side s) const;
  PublicCoins& coins() { return coins_; }

 private:
  Party party_;
  int n_;
  ListModel model_;
  const PreferenceProfile* own_;
  PublicCoins coins_;
};

enum class StabilityVerdict { kStable, kUnstable };
enum class FractionVerdict { kAtLeast, kAtMost };

using ProtocolOutput =
    std::variant<std::monostate, int, StabilityVerdict, FractionVerdict,
                 Marriage>;

// null, integer, "stable"/"unstable", "at-least"/"at-most", or a marriage
// object.
Json OutputToJson(const ProtocolOutput& out);

class PartyProgram {
 public:
  virtual ~PartyProgram() = default;
  // Who speaks next, or nullopt when the run is over.
  virtual std::optional<Party> next_speaker() = 0;
  // Called only when this party is the next speaker.
  virtual BitString speak() = 0;
  // Called with every message sent by the other party.
  virtual void hear(const BitString& bits) = 0;
  virtual ProtocolOutput output() const = 0;
};

using PartyFactory = std::function<std::unique_ptr<PartyProgram>(PartyView&)>;

struct TwoPartyProtocol {
  std::string name;
  PartyFactory make_alice;
  PartyFactory make_bob;
};

struct ProtocolRun {
  ProtocolOutput output;
  Transcript transcript;
  std::uint64_t seed = 0;
};

struct RunLimits {
  std::int64_t max_messages = 1 << 24;
};

// Throws ProtocolFault on schedule disagreement, differing outputs or an
// exceeded message limit; IsolationFault propagates from a party that reads
// the other profile.
ProtocolRun RunTwoParty(const TwoPartyProtocol& protocol,
                        const PreferenceProfile& women,
                        const PreferenceProfile& men, std::uint64_t seed,
                        ListModel model = ListModel::kFull,
                        const RunLimits& limits = {});
ProtocolRun RunTwoParty(const TwoPartyProtocol& protocol,
                        const MarriageMarket& market, std::uint64_t seed,
                        const RunLimits& limits = {});

}  // namespace stablelab

#endif  // STABLELAB_PROTOCOL_HARNESS_HPP_
