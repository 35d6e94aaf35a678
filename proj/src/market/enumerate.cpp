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

#include "stablelab/market/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stablelab/errors.hpp"

namespace stablelab {
namespace {

// Flat rank tables with "unlisted" mapped to a rank worse than any listed
// position and "single" mapped worse still, so both stability conditions
// become integer comparisons.
class StabilityChecker {
 public:
  explicit StabilityChecker(const MarriageMarket& market)
      : n_(market.n()),
        wrank_(static_cast<size_t>(n_ + 1) * (n_ + 1), kUnlisted),
        mrank_(static_cast<size_t>(n_ + 1) * (n_ + 1), kUnlisted) {
    for (int a = 1; a <= n_; ++a) {
      for (int b = 1; b <= n_; ++b) {
        const int rw = market.women().rank(a, b);
        const int rm = market.men().rank(a, b);
        if (rw != 0) wrank_[idx(a, b)] = rw;
        if (rm != 0) mrank_[idx(a, b)] = rm;
      }
      wrank_[idx(a, 0)] = kSingle;
      mrank_[idx(a, 0)] = kSingle;
    }
  }

  // husband[w], wife[m] with 0 meaning single.
  bool stable(const std::vector<int>& husband,
              const std::vector<int>& wife) const {
    for (int w = 1; w <= n_; ++w) {
      const int h = husband[w];
      if (h != 0 && (wrank_[idx(w, h)] == kUnlisted ||
                     mrank_[idx(h, w)] == kUnlisted)) {
        return false;
      }
    }
    for (int w = 1; w <= n_; ++w) {
      const int mine = wrank_[idx(w, husband[w])];
      for (int m = 1; m <= n_; ++m) {
        if (m == husband[w]) continue;
        const int rwm = wrank_[idx(w, m)];
        if (rwm >= mine || rwm == kUnlisted) continue;
        const int rmw = mrank_[idx(m, w)];
        if (rmw != kUnlisted && rmw < mrank_[idx(m, wife[m])]) return false;
      }
    }
    return true;
  }

 private:
  static constexpr int kUnlisted = 1 << 20;
  static constexpr int kSingle = 1 << 21;
  size_t idx(int a, int b) const {
    return static_cast<size_t>(a) * (n_ + 1) + b;
  }

  int n_;
  std::vector<int> wrank_;
  std::vector<int> mrank_;
};

void ExtendPartial(int n, int w, std::vector<int>& husband,
                   std::vector<int>& wife,
                   const std::function<void(const std::vector<int>&,
                                            const std::vector<int>&)>& fn) {
  if (w > n) {
    fn(husband, wife);
    return;
  }
  husband[w] = 0;
  ExtendPartial(n, w + 1, husband, wife, fn);
  for (int m = 1; m <= n; ++m) {
    if (wife[m] != 0) continue;
    husband[w] = m;
    wife[m] = w;
    ExtendPartial(n, w + 1, husband, wife, fn);
    wife[m] = 0;
  }
  husband[w] = 0;
}

Marriage ToMarriage(int n, const std::vector<int>& husband) {
  Marriage mu(n);
  for (int w = 1; w <= n; ++w) {
    if (husband[w] != 0) mu.marry(w, husband[w]);
  }
  return mu;
}

}  // namespace

void ForEachPerfectMarriage(int n,
                            const std::function<void(const Marriage&)>& fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    Marriage mu(n);
    for (int w = 1; w <= n; ++w) mu.marry(w, perm[w - 1]);
    fn(mu);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void ForEachMarriage(int n, const std::function<void(const Marriage&)>& fn) {
  std::vector<int> husband(n + 1, 0), wife(n + 1, 0);
  ExtendPartial(n, 1, husband, wife,
                [&](const std::vector<int>& h, const std::vector<int>&) {
                  fn(ToMarriage(n, h));
                });
}

bool WithinOracleBound(int n, ListModel model, const OracleLimits& limits) {
  return n <= (model == ListModel::kFull ? limits.full : limits.partial);
}

std::vector<Marriage> EnumerateStable(const MarriageMarket& market,
                                      const OracleLimits& limits) {
  const int n = market.n();
  if (!WithinOracleBound(n, market.model(), limits)) {
    throw CapacityError(
        "n=" + std::to_string(n) + " exceeds the " +
        std::string(ListModelName(market.model())) +
        "-model oracle bound of " +
        std::to_string(market.model() == ListModel::kFull ? limits.full
                                                          : limits.partial));
  }
  const StabilityChecker checker(market);
  std::vector<Marriage> out;
  if (market.model() == ListModel::kFull) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> husband(n + 1, 0), wife(n + 1, 0);
    do {
      for (int w = 1; w <= n; ++w) {
        husband[w] = perm[w - 1];
        wife[perm[w - 1]] = w;
      }
      if (checker.stable(husband, wife)) out.push_back(ToMarriage(n, husband));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<int> husband(n + 1, 0), wife(n + 1, 0);
    ExtendPartial(n, 1, husband, wife,
                  [&](const std::vector<int>& h, const std::vector<int>& wv) {
                    if (checker.stable(h, wv)) out.push_back(ToMarriage(n, h));
                  });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stablelab
