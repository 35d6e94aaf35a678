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

// Marriage-market data model. All participant indices are 1-based: women
// are w_1..w_n and men are m_1..m_n.

#ifndef STABLELAB_MARKET_MARKET_HPP_
#define STABLELAB_MARKET_MARKET_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace stablelab {

enum class Side { kWoman, kMan };

constexpr Side Opposite(Side s) {
  return s == Side::kWoman ? Side::kMan : Side::kWoman;
}
std::string_view SideName(Side s);

struct ParticipantId {
  Side side = Side::kWoman;
  int index = 1;

  friend bool operator==(const ParticipantId&, const ParticipantId&) = default;
};

// Full: every list ranks all n participants of the other side.
// Partial: lists are acceptable subsets; unlisted means unacceptable.
enum class ListModel { kFull, kPartial };

std::string_view ListModelName(ListModel m);

// One side's preference lists. Keeps a rank table next to the lists so that
// preference lookups are O(1).
class PreferenceProfile {
 public:
  PreferenceProfile() = default;
  // Throws DomainError on out-of-range entries, duplicates, or a list count
  // different from n.
  PreferenceProfile(int n, std::vector<std::vector<int>> lists);

  int n() const { return n_; }
  const std::vector<int>& list(int who) const;
  const std::vector<std::vector<int>>& lists() const { return lists_; }

  // 1-based position of `target` on `who`'s list, 0 when unlisted.
  int rank(int who, int target) const;
  bool lists_target(int who, int target) const { return rank(who, target) != 0; }

  // Strict preference: `a` precedes `b`, or `a` is listed and `b` is not.
  bool prefers(int who, int a, int b) const;
  bool weakly_prefers(int who, int a, int b) const;

  // True when every list has length n.
  bool is_full() const;

  friend bool operator==(const PreferenceProfile& a,
                         const PreferenceProfile& b) {
    return a.n_ == b.n_ && a.lists_ == b.lists_;
  }

 private:
  void check_index(int i, const char* what) const;

  int n_ = 0;
  std::vector<std::vector<int>> lists_;
  std::vector<int> rank_;  // row-major n x n, (who-1)*n + (target-1)
};

class MarriageMarket {
 public:
  MarriageMarket() = default;
  // Throws DomainError if the profiles disagree on n or if `model` is full
  // and some list is incomplete.
  MarriageMarket(ListModel model, PreferenceProfile women,
                 PreferenceProfile men);

  int n() const { return women_.n(); }
  ListModel model() const { return model_; }
  const PreferenceProfile& women() const { return women_; }
  const PreferenceProfile& men() const { return men_; }
  const PreferenceProfile& profile(Side s) const {
    return s == Side::kWoman ? women_ : men_;
  }

  // Swaps the roles of women and men.
  MarriageMarket transposed() const;

  friend bool operator==(const MarriageMarket&,
                         const MarriageMarket&) = default;

 private:
  ListModel model_ = ListModel::kFull;
  PreferenceProfile women_;
  PreferenceProfile men_;
};

using Couple = std::pair<int, int>;  // (woman, man)

// Injective partial mapping between women and men of an n-by-n market.
class Marriage {
 public:
  Marriage() = default;
  explicit Marriage(int n);
  // Throws DomainError on out-of-range indices or a participant that
  // appears twice.
  Marriage(int n, const std::vector<Couple>& pairs);

  static Marriage Identity(int n);

  int n() const { return n_; }
  std::optional<int> husband(int woman) const;
  std::optional<int> wife(int man) const;
  std::optional<int> spouse(ParticipantId p) const;

  // Marries w and m. Either may not already be married.
  void marry(int woman, int man);
  void divorce_woman(int woman);

  // Couples sorted by woman index.
  std::vector<Couple> pairs() const;
  int size() const;
  bool is_perfect() const { return size() == n_; }
  bool contains(int woman, int man) const;

  friend bool operator==(const Marriage& a, const Marriage& b) {
    return a.n_ == b.n_ && a.husband_ == b.husband_;
  }
  friend bool operator<(const Marriage& a, const Marriage& b) {
    return a.husband_ < b.husband_;
  }

 private:
  void check_woman(int w) const;
  void check_man(int m) const;

  int n_ = 0;
  std::vector<int> husband_;  // index w-1, 0 = single
  std::vector<int> wife_;     // index m-1, 0 = single
};

}  // namespace stablelab

#endif  // STABLELAB_MARKET_MARKET_HPP_
