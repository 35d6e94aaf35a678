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

#include "stablelab/market/market.hpp"

#include <string>

#include "stablelab/errors.hpp"

namespace stablelab {

std::string_view SideName(Side s) {
  return s == Side::kWoman ? "woman" : "man";
}

std::string_view ListModelName(ListModel m) {
  return m == ListModel::kFull ? "full" : "partial";
}

PreferenceProfile::PreferenceProfile(int n, std::vector<std::vector<int>> lists)
    : n_(n), lists_(std::move(lists)) {
  if (n < 1) throw DomainError("profile size must be >= 1");
  if (static_cast<int>(lists_.size()) != n) {
    throw DomainError("profile has " + std::to_string(lists_.size()) +
                      " lists, expected " + std::to_string(n));
  }
  rank_.assign(static_cast<size_t>(n) * n, 0);
  for (int who = 1; who <= n; ++who) {
    const auto& l = lists_[who - 1];
    if (static_cast<int>(l.size()) > n) {
      throw DomainError("list of participant " + std::to_string(who) +
                        " is longer than n");
    }
    for (size_t pos = 0; pos < l.size(); ++pos) {
      const int t = l[pos];
      if (t < 1 || t > n) {
        throw DomainError("list of participant " + std::to_string(who) +
                          " names out-of-range index " + std::to_string(t));
      }
      int& slot = rank_[static_cast<size_t>(who - 1) * n + (t - 1)];
      if (slot != 0) {
        throw DomainError("list of participant " + std::to_string(who) +
                          " repeats index " + std::to_string(t));
      }
      slot = static_cast<int>(pos) + 1;
    }
  }
}

void PreferenceProfile::check_index(int i, const char* what) const {
  if (i < 1 || i > n_) {
    throw DomainError(std::string(what) + " index " + std::to_string(i) +
                      " out of range [1," + std::to_string(n_) + "]");
  }
}

const std::vector<int>& PreferenceProfile::list(int who) const {
  check_index(who, "participant");
  return lists_[who - 1];
}

int PreferenceProfile::rank(int who, int target) const {
  check_index(who, "participant");
  check_index(target, "candidate");
  return rank_[static_cast<size_t>(who - 1) * n_ + (target - 1)];
}

bool PreferenceProfile::prefers(int who, int a, int b) const {
  const int ra = rank(who, a);
  const int rb = rank(who, b);
  if (a == b || ra == 0) return false;
  return rb == 0 || ra < rb;
}

bool PreferenceProfile::weakly_prefers(int who, int a, int b) const {
  if (a == b) {
    check_index(who, "participant");
    check_index(a, "candidate");
    return true;
  }
  return prefers(who, a, b);
}

bool PreferenceProfile::is_full() const {
  for (const auto& l : lists_) {
    if (static_cast<int>(l.size()) != n_) return false;
  }
  return true;
}

MarriageMarket::MarriageMarket(ListModel model, PreferenceProfile women,
                               PreferenceProfile men)
    : model_(model), women_(std::move(women)), men_(std::move(men)) {
  if (women_.n() != men_.n()) {
    throw DomainError("women and men profiles have different sizes");
  }
  if (women_.n() < 1) throw DomainError("market size must be >= 1");
  if (model_ == ListModel::kFull && !(women_.is_full() && men_.is_full())) {
    throw DomainError("full-list market has an incomplete preference list");
  }
}

MarriageMarket MarriageMarket::transposed() const {
  return MarriageMarket(model_, men_, women_);
}

Marriage::Marriage(int n) : n_(n), husband_(n, 0), wife_(n, 0) {
  if (n < 1) throw DomainError("marriage size must be >= 1");
}

Marriage::Marriage(int n, const std::vector<Couple>& pairs) : Marriage(n) {
  for (const auto& [w, m] : pairs) marry(w, m);
}

Marriage Marriage::Identity(int n) {
  Marriage mu(n);
  for (int i = 1; i <= n; ++i) mu.marry(i, i);
  return mu;
}

void Marriage::check_woman(int w) const {
  if (w < 1 || w > n_) {
    throw DomainError("woman index " + std::to_string(w) + " out of range");
  }
}

void Marriage::check_man(int m) const {
  if (m < 1 || m > n_) {
    throw DomainError("man index " + std::to_string(m) + " out of range");
  }
}

std::optional<int> Marriage::husband(int woman) const {
  check_woman(woman);
  const int h = husband_[woman - 1];
  return h == 0 ? std::nullopt : std::optional<int>(h);
}

std::optional<int> Marriage::wife(int man) const {
  check_man(man);
  const int w = wife_[man - 1];
  return w == 0 ? std::nullopt : std::optional<int>(w);
}

std::optional<int> Marriage::spouse(ParticipantId p) const {
  return p.side == Side::kWoman ? husband(p.index) : wife(p.index);
}

void Marriage::marry(int woman, int man) {
  check_woman(woman);
  check_man(man);
  if (husband_[woman - 1] != 0) {
    throw DomainError("woman " + std::to_string(woman) + " is married twice");
  }
  if (wife_[man - 1] != 0) {
    throw DomainError("man " + std::to_string(man) + " is married twice");
  }
  husband_[woman - 1] = man;
  wife_[man - 1] = woman;
}

void Marriage::divorce_woman(int woman) {
  check_woman(woman);
  const int m = husband_[woman - 1];
  if (m == 0) return;
  husband_[woman - 1] = 0;
  wife_[m - 1] = 0;
}

std::vector<Couple> Marriage::pairs() const {
  std::vector<Couple> out;
  for (int w = 1; w <= n_; ++w) {
    if (husband_[w - 1] != 0) out.emplace_back(w, husband_[w - 1]);
  }
  return out;
}

int Marriage::size() const {
  int k = 0;
  for (int h : husband_) k += h != 0;
  return k;
}

bool Marriage::contains(int woman, int man) const {
  check_woman(woman);
  check_man(man);
  return husband_[woman - 1] == man;
}

}  // namespace stablelab
