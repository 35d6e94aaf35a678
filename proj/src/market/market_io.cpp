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

#include "stablelab/market/market_io.hpp"

#include <fstream>
#include <sstream>

#include "stablelab/errors.hpp"

namespace stablelab {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) {
    throw FormatError(std::string("field \"") + key + "\" is not an integer");
  }
  return v.get<int>();
}

std::vector<std::vector<int>> ListsField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_array()) {
    throw FormatError(std::string("field \"") + key + "\" is not an array");
  }
  std::vector<std::vector<int>> out;
  for (const auto& row : v) {
    if (!row.is_array()) throw FormatError("preference list is not an array");
    std::vector<int> list;
    for (const auto& e : row) {
      if (!e.is_number_integer()) {
        throw FormatError("preference list entry is not an integer");
      }
      list.push_back(e.get<int>());
    }
    out.push_back(std::move(list));
  }
  return out;
}

Json ListsToJson(const PreferenceProfile& p) {
  Json arr = Json::array();
  for (const auto& l : p.lists()) arr.push_back(l);
  return arr;
}

Json ParseText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Json MarketToJson(const MarriageMarket& market) {
  Json j;
  j["n"] = market.n();
  j["model"] = std::string(ListModelName(market.model()));
  j["women"] = ListsToJson(market.women());
  j["men"] = ListsToJson(market.men());
  return j;
}

MarriageMarket MarketFromJson(const Json& j) {
  const int n = IntField(j, "n");
  const Json& model = Field(j, "model");
  ListModel lm;
  if (model == "full") {
    lm = ListModel::kFull;
  } else if (model == "partial") {
    lm = ListModel::kPartial;
  } else {
    throw FormatError("model must be \"full\" or \"partial\"");
  }
  return MarriageMarket(lm, PreferenceProfile(n, ListsField(j, "women")),
                        PreferenceProfile(n, ListsField(j, "men")));
}

Json MarriageToJson(const Marriage& mu) {
  Json j;
  j["n"] = mu.n();
  Json pairs = Json::array();
  for (const auto& [w, m] : mu.pairs()) pairs.push_back({w, m});
  j["pairs"] = std::move(pairs);
  return j;
}

Marriage MarriageFromJson(const Json& j) {
  const int n = IntField(j, "n");
  const Json& pairs = Field(j, "pairs");
  if (!pairs.is_array()) throw FormatError("\"pairs\" is not an array");
  Marriage mu(n);
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw FormatError("each pair must be [woman, man]");
    }
    mu.marry(p[0].get<int>(), p[1].get<int>());
  }
  return mu;
}

std::string SerializeMarket(const MarriageMarket& market) {
  return MarketToJson(market).dump() + "\n";
}

MarriageMarket ParseMarket(const std::string& text) {
  return MarketFromJson(ParseText(text));
}

std::string SerializeMarriage(const Marriage& mu) {
  return MarriageToJson(mu).dump() + "\n";
}

Marriage ParseMarriage(const std::string& text) {
  return MarriageFromJson(ParseText(text));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("write failed for " + path);
}

}  // namespace stablelab
