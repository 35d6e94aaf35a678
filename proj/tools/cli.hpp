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

#ifndef STABLELAB_TOOLS_CLI_HPP_
#define STABLELAB_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace stablelab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitContract = 4;

// `args` excludes the program name. Primary output goes to `out` (or the
// --out file); errors are a single "error: <kind>: <message>" line on `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace stablelab::cli

#endif  // STABLELAB_TOOLS_CLI_HPP_
