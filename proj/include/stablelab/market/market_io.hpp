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

// JSON market and marriage files.
//
//   market:   {"n":3,"model":"full","women":[[...],...],"men":[[...],...]}
//   marriage: {"n":3,"pairs":[[w,m],...]}
//
// Serialization is canonical (fixed key order, no whitespace, trailing
// newline), so save(load(text)) == text for any text produced by save.

#ifndef STABLELAB_MARKET_MARKET_IO_HPP_
#define STABLELAB_MARKET_MARKET_IO_HPP_

#include <string>

#include "json.hpp"
#include "stablelab/market/market.hpp"

namespace stablelab {

using Json = nlohmann::ordered_json;

Json MarketToJson(const MarriageMarket& market);
MarriageMarket MarketFromJson(const Json& j);
Json MarriageToJson(const Marriage& mu);
Marriage MarriageFromJson(const Json& j);

std::string SerializeMarket(const MarriageMarket& market);
MarriageMarket ParseMarket(const std::string& text);
std::string SerializeMarriage(const Marriage& mu);
Marriage ParseMarriage(const std::string& text);

// File helpers; throw FormatError on I/O or parse failure.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

inline MarriageMarket LoadMarket(const std::string& path) {
  return ParseMarket(ReadTextFile(path));
}
inline void SaveMarket(const std::string& path, const MarriageMarket& m) {
  WriteTextFile(path, SerializeMarket(m));
}
inline Marriage LoadMarriage(const std::string& path) {
  return ParseMarriage(ReadTextFile(path));
}
inline void SaveMarriage(const std::string& path, const Marriage& mu) {
  WriteTextFile(path, SerializeMarriage(mu));
}

}  // namespace stablelab

#endif  // STABLELAB_MARKET_MARKET_IO_HPP_
