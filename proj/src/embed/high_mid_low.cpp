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

#include "stablelab/embed/high_mid_low.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stablelab/errors.hpp"

namespace stablelab {
namespace {

constexpr double kTolerance = 1e-9;

void AppendRange(std::vector<int>& list, int first, int last) {
  for (int c = first; c <= last; ++c) list.push_back(c);
}

// `bit(self, other)` reads the owner's bit for the high pair it belongs to.
template <typename BitFn>
PreferenceProfile Tiered(const HighMidLowParams& p, BitFn bit) {
  const int n = p.n();
  const int h = p.high();
  const int half = n / 2;
  std::vector<std::vector<int>> lists(n);
  for (int self = 1; self <= n; ++self) {
    auto& l = lists[self - 1];
    if (p.is_low(self)) {
      AppendRange(l, 1, n);
    } else if (p.is_mid(self)) {
      AppendRange(l, half + 1, n);
      AppendRange(l, 1, half);
    } else {
      for (int o = 1; o <= h; ++o) {
        if (bit(self, o)) l.push_back(o);
      }
      AppendRange(l, half + 1, n);
      AppendRange(l, h + 1, half);
      for (int o = 1; o <= h; ++o) {
        if (!bit(self, o)) l.push_back(o);
      }
    }
  }
  return PreferenceProfile(n, std::move(lists));
}

void RequireDomain(const HighMidLowParams& p, const BitAssignment& bits) {
  if (!(bits.domain() == p.domain())) {
    throw DomainError("bits must be over the " + std::to_string(p.high()) +
                      "x" + std::to_string(p.high()) + " grid");
  }
}

void RequireEven(int n) {
  if (n < 2 || n % 2 != 0) {
    throw ParameterError("n must be a positive even integer, got " +
                         std::to_string(n));
  }
}

}  // namespace

HighMidLowParams HighMidLowParams::Make(int n, double delta) {
  RequireEven(n);
  if (!(delta > 0.0) || delta > 1.0 + kTolerance) {
    throw ParameterError("delta must lie in (0, 1]");
  }
  const double h = delta * n / 2.0;
  const double rounded = std::round(h);
  if (std::abs(h - rounded) > kTolerance || rounded < 1) {
    throw ParameterError("delta*n/2 = " + std::to_string(h) +
                         " is not a positive integer");
  }
  return HighMidLowParams(n, static_cast<int>(rounded));
}

PreferenceProfile HighMidLowWomen(const HighMidLowParams& p,
                                  const BitAssignment& x) {
  RequireDomain(p, x);
  return Tiered(p, [&x](int w, int m) { return x.at(w, m); });
}

PreferenceProfile HighMidLowMen(const HighMidLowParams& p,
                                const BitAssignment& y) {
  RequireDomain(p, y);
  return Tiered(p, [&y](int m, int w) { return y.at(w, m); });
}

MarriageMarket BuildHighMidLow(const HighMidLowParams& p,
                               const DisjInstance& d) {
  return MarriageMarket(ListModel::kFull, HighMidLowWomen(p, d.x),
                        HighMidLowMen(p, d.y));
}

Marriage CanonicalMu1(int n) {
  RequireEven(n);
  const int half = n / 2;
  Marriage mu(n);
  for (int i = 1; i <= half; ++i) {
    mu.marry(i + half, i);
    mu.marry(i, i + half);
  }
  return mu;
}

Marriage CanonicalMu0(int n, int alpha, int beta) {
  RequireEven(n);
  const int half = n / 2;
  if (alpha < 1 || alpha > half || beta < 1 || beta > half) {
    throw ParameterError("alpha and beta must lie in [1, n/2]");
  }
  Marriage mu(n);
  mu.marry(alpha, beta);
  for (int i = 1; i < alpha; ++i) mu.marry(i, i + half);
  for (int i = 1; i < beta; ++i) mu.marry(i + half, i);
  for (int i = alpha + 1; i <= half; ++i) mu.marry(i, i + half - 1);
  for (int i = beta + 1; i <= half; ++i) mu.marry(i + half - 1, i);
  mu.marry(n, n);
  return mu;
}

Marriage CanonicalMu0(const HighMidLowParams& p, int alpha, int beta) {
  if (alpha < 1 || alpha > p.high() || beta < 1 || beta > p.high()) {
    throw ParameterError("alpha and beta must index high participants");
  }
  return CanonicalMu0(p.n(), alpha, beta);
}

double ChooseDelta(double epsilon, int n) {
  RequireEven(n);
  const double cap = std::min(0.5, 1.0 - 2.0 * epsilon - 1.0 / n);
  const int a = static_cast<int>(std::floor(cap * n / 2.0 + kTolerance));
  if (a < 1) {
    throw ParameterError("no valid delta for epsilon = " +
                         std::to_string(epsilon) +
                         " at n = " + std::to_string(n));
  }
  return 2.0 * a / n;
}

}  // namespace stablelab
