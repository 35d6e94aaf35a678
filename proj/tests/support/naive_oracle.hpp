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

// Test-only reference implementations written straight from the
// definitions, over raw preference lists. They share no code with the
// library beyond the list container, so they can check the library's
// rank-table and oracle paths.

#ifndef STABLELAB_TESTS_SUPPORT_NAIVE_ORACLE_HPP_
#define STABLELAB_TESTS_SUPPORT_NAIVE_ORACLE_HPP_

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace naive {

using Lists = std::vector<std::vector<int>>;   // lists[who-1]
using Spouses = std::vector<int>;              // spouse[i-1], 0 = single

// Position on list, or -1 when unlisted.
inline int Pos(const Lists& lists, int who, int target) {
  const auto& l = lists[who - 1];
  auto it = std::find(l.begin(), l.end(), target);
  return it == l.end() ? -1 : static_cast<int>(it - l.begin());
}

// who strictly prefers a over its current partner (0 = single).
inline bool PrefersOver(const Lists& lists, int who, int a, int current) {
  const int pa = Pos(lists, who, a);
  if (pa < 0) return false;
  if (current == 0) return true;
  const int pc = Pos(lists, who, current);
  return pc < 0 || pa < pc;
}

inline std::vector<std::pair<int, int>> BlockingPairs(const Lists& women,
                                                      const Lists& men,
                                                      const Spouses& husband) {
  const int n = static_cast<int>(women.size());
  Spouses wife(n, 0);
  for (int w = 1; w <= n; ++w) {
    if (husband[w - 1] != 0) wife[husband[w - 1] - 1] = w;
  }
  std::vector<std::pair<int, int>> out;
  for (int w = 1; w <= n; ++w) {
    for (int m = 1; m <= n; ++m) {
      if (husband[w - 1] == m) continue;
      if (PrefersOver(women, w, m, husband[w - 1]) &&
          PrefersOver(men, m, w, wife[m - 1])) {
        out.emplace_back(w, m);
      }
    }
  }
  return out;
}

inline bool IsStable(const Lists& women, const Lists& men,
                     const Spouses& husband) {
  const int n = static_cast<int>(women.size());
  for (int w = 1; w <= n; ++w) {
    const int m = husband[w - 1];
    if (m != 0 && (Pos(women, w, m) < 0 || Pos(men, m, w) < 0)) return false;
  }
  return BlockingPairs(women, men, husband).empty();
}

// All husband vectors (perfect if `perfect`, else all injective partial maps)
// that are stable, in lexicographic order.
inline std::vector<Spouses> StableSet(const Lists& women, const Lists& men,
                                      bool perfect) {
  const int n = static_cast<int>(women.size());
  std::vector<Spouses> out;
  Spouses h(n, 0);
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self, int w) -> void {
    if (w > n) {
      if (IsStable(women, men, h)) out.push_back(h);
      return;
    }
    if (!perfect) {
      h[w - 1] = 0;
      self(self, w + 1);
    }
    for (int m = 1; m <= n; ++m) {
      if (used[m]) continue;
      used[m] = true;
      h[w - 1] = m;
      self(self, w + 1);
      used[m] = false;
    }
    h[w - 1] = 0;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace naive

#endif  // STABLELAB_TESTS_SUPPORT_NAIVE_ORACLE_HPP_
