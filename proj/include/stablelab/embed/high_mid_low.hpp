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

// Three-tier market embedding a DISJ instance over the high x high grid.
//
// Per side, indices 1..h are high, h+1..n/2 mid and n/2+1..n low, where
// h = delta*n/2. Low participants list the other side in index order. Mid
// participants list low, then high, then mid, each block ascending. High
// woman w_i lists {m_j high : x(i,j)=1}, low men, mid men, then
// {m_j high : x(i,j)=0}; high man m_j is built the same way from y(., j).
//
// With mu_1 = {(w_{i+n/2}, m_i), (w_i, m_{i+n/2})}: a disjoint instance has
// mu_1 as its only stable marriage. With a unique common entry (a, b) the
// only stable marriage is mu_0(a, b), and the two are at divorce distance at
// least (1 - delta) n.

#ifndef STABLELAB_EMBED_HIGH_MID_LOW_HPP_
#define STABLELAB_EMBED_HIGH_MID_LOW_HPP_

#include "stablelab/embed/disj.hpp"
#include "stablelab/market/market.hpp"

namespace stablelab {

class HighMidLowParams {
 public:
  // Throws ParameterError unless n is even, 0 < delta <= 1 and delta*n/2 is
  // an integer (which makes the mid tier integral too).
  static HighMidLowParams Make(int n, double delta);

  int n() const { return n_; }
  double delta() const { return static_cast<double>(2 * high_) / n_; }
  int high() const { return high_; }
  int mid() const { return n_ / 2 - high_; }
  int low() const { return n_ / 2; }
  // Grid(high()).
  DisjDomain domain() const { return DisjDomain::Grid(high_); }

  bool is_high(int index) const { return index <= high_; }
  bool is_mid(int index) const { return index > high_ && index <= n_ / 2; }
  bool is_low(int index) const { return index > n_ / 2; }

  friend bool operator==(const HighMidLowParams&,
                         const HighMidLowParams&) = default;

 private:
  HighMidLowParams(int n, int high) : n_(n), high_(high) {}
  int n_;
  int high_;
};

PreferenceProfile HighMidLowWomen(const HighMidLowParams& p,
                                  const BitAssignment& x);
PreferenceProfile HighMidLowMen(const HighMidLowParams& p,
                                const BitAssignment& y);
// Throws DomainError if the instance is not over p.domain().
MarriageMarket BuildHighMidLow(const HighMidLowParams& p,
                               const DisjInstance& d);

// Throws ParameterError for odd or non-positive n.
Marriage CanonicalMu1(int n);

// Throws ParameterError for odd n or alpha, beta outside [1, n/2].
Marriage CanonicalMu0(int n, int alpha, int beta);
// Also requires alpha, beta <= p.high().
Marriage CanonicalMu0(const HighMidLowParams& p, int alpha, int beta);

// Largest delta = 2a/n (a >= 1) with delta <= min(1/2, 1 - 2*epsilon - 1/n),
// so that epsilon < (1 - delta)/2. Throws ParameterError if none exists.
double ChooseDelta(double epsilon, int n);

}  // namespace stablelab

#endif  // STABLELAB_EMBED_HIGH_MID_LOW_HPP_
