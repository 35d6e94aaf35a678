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

// Turns a deterministic query strategy into a two-party protocol in which
// every metered query answer is one transmitted bit.

#ifndef STABLELAB_QUERY_ADAPTER_HPP_
#define STABLELAB_QUERY_ADAPTER_HPP_

#include <functional>
#include <optional>
#include <string>

#include "stablelab/protocol/harness.hpp"
#include "stablelab/query/algorithms.hpp"
#include "stablelab/query/oracle.hpp"

namespace stablelab {

// Must be deterministic: it is re-run from the start as answers arrive.
using QueryStrategy = std::function<ProtocolOutput(PreferenceOracle&)>;

// Without `home`, both parties replay the strategy; the side that owns each
// query answers it with one bit, so bits == total queries. Every query must
// be Boolean.
//
// With `home`, only that side's party runs the strategy. Its own-side
// queries are answered locally for free; each other-side query must be
// Boolean and costs one bit from the other party, so bits == queries to the
// other side. Query descriptors and the final output reach the other party
// through a shared per-run board that is not metered. A protocol built this
// way must not be run concurrently with itself.
//
// A query touching both profiles, or a non-Boolean query that would need
// transmitting, throws ModelViolation during the run.
TwoPartyProtocol AdaptStrategy(std::string name, QueryStrategy strategy,
                               std::optional<Side> home = std::nullopt);

QueryStrategy DaStrategy();
QueryStrategy VerifierStrategy(Marriage mu, VerifierOptions options = {});

}  // namespace stablelab

#endif  // STABLELAB_QUERY_ADAPTER_HPP_
