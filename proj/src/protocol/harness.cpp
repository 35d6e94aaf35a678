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

#include "stablelab/protocol/harness.hpp"

#include "stablelab/errors.hpp"

namespace stablelab {

const char* PartyTag(Party p) { return p == Party::kAlice ? "A" : "B"; }

void Transcript::append(Message m) {
  for (char c : m.bits) {
    if (c != '0' && c != '1') {
      throw ProtocolFault("message contains a non-bit character");
    }
  }
  total_bits_ += static_cast<std::int64_t>(m.bits.size());
  messages_.push_back(std::move(m));
}

std::string Transcript::Dump() const {
  std::string out;
  for (const auto& m : messages_) {
    out += PartyTag(m.sender);
    out += ' ';
    out += m.bits;
    out += '\n';
  }
  return out;
}

BitString EncodeUint(std::uint64_t value, int width) {
  if (width < 64 && (value >> width) != 0) {
    throw DomainError("value does not fit in " + std::to_string(width) +
                      " bits");
  }
  BitString out(width, '0');
  for (int b = 0; b < width; ++b) {
    if ((value >> (width - 1 - b)) & 1u) out[b] = '1';
  }
  return out;
}

std::uint64_t DecodeUint(const BitString& bits, std::size_t pos, int width) {
  if (pos + width > bits.size()) {
    throw ProtocolFault("message shorter than expected");
  }
  std::uint64_t v = 0;
  for (int b = 0; b < width; ++b) v = (v << 1) | (bits[pos + b] == '1');
  return v;
}

int BitWidth(int n) {
  int w = 0;
  while ((1LL << w) < n) ++w;
  return w;
}

int PublicCoins::UniformInt(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

const PreferenceProfile& PartyView::profile(Side s) const {
  if (s != side()) {
    throw IsolationFault(std::string(PartyTag(party_)) +
                         " tried to read the other side's preferences");
  }
  return *own_;
}

Json OutputToJson(const ProtocolOutput& out) {
  struct Visitor {
    Json operator()(std::monostate) const { return Json(); }
    Json operator()(int v) const { return Json(v); }
    Json operator()(StabilityVerdict v) const {
      return v == StabilityVerdict::kStable ? "stable" : "unstable";
    }
    Json operator()(FractionVerdict v) const {
      return v == FractionVerdict::kAtLeast ? "at-least" : "at-most";
    }
    Json operator()(const Marriage& mu) const { return MarriageToJson(mu); }
  };
  return std::visit(Visitor{}, out);
}

ProtocolRun RunTwoParty(const TwoPartyProtocol& protocol,
                        const PreferenceProfile& women,
                        const PreferenceProfile& men, std::uint64_t seed,
                        ListModel model, const RunLimits& limits) {
  if (women.n() != men.n()) {
    throw DomainError("profiles disagree on n");
  }
  const int n = women.n();
  PartyView alice_view(Party::kAlice, n, model, women, seed);
  PartyView bob_view(Party::kBob, n, model, men, seed);
  auto alice = protocol.make_alice(alice_view);
  auto bob = protocol.make_bob(bob_view);

  ProtocolRun run;
  run.seed = seed;
  while (true) {
    const auto a = alice->next_speaker();
    const auto b = bob->next_speaker();
    if (a != b) {
      throw ProtocolFault(protocol.name + ": parties disagree on the schedule");
    }
    if (!a) break;
    if (static_cast<std::int64_t>(run.transcript.messages().size()) >=
        limits.max_messages) {
      throw ProtocolFault(protocol.name + ": message limit exceeded");
    }
    PartyProgram& speaker = *a == Party::kAlice ? *alice : *bob;
    PartyProgram& listener = *a == Party::kAlice ? *bob : *alice;
    BitString bits = speaker.speak();
    run.transcript.append({*a, bits});
    listener.hear(bits);
  }
  run.output = alice->output();
  if (!(run.output == bob->output())) {
    throw ProtocolFault(protocol.name + ": parties disagree on the output");
  }
  return run;
}

ProtocolRun RunTwoParty(const TwoPartyProtocol& protocol,
                        const MarriageMarket& market, std::uint64_t seed,
                        const RunLimits& limits) {
  return RunTwoParty(protocol, market.women(), market.men(), seed,
                     market.model(), limits);
}

}  // namespace stablelab
