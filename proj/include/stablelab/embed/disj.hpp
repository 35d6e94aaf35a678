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

// Set-disjointness instances. Bits are indexed by pairs (i, j): over the
// off-diagonal domain {(i, j) : i != j} of [n]^2, or over the full k-by-k
// grid. Storage is row-major, rows by i, columns by j, diagonal skipped for
// the off-diagonal domain.

#ifndef STABLELAB_EMBED_DISJ_HPP_
#define STABLELAB_EMBED_DISJ_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stablelab/market/market.hpp"
#include "stablelab/market/market_io.hpp"

namespace stablelab {

enum class DisjDomainKind { kOffDiagonal, kGrid };

class DisjDomain {
 public:
  static DisjDomain OffDiagonal(int n);
  static DisjDomain Grid(int k);

  DisjDomainKind kind() const { return kind_; }
  // n for the off-diagonal domain, k for the grid.
  int side() const { return side_; }
  int size() const;
  bool contains(int i, int j) const;
  // Row-major storage offset; throws DomainError outside the domain.
  int offset(int i, int j) const;
  // Inverse of offset().
  Couple entry(int offset) const;

  friend bool operator==(const DisjDomain&, const DisjDomain&) = default;

 private:
  DisjDomain(DisjDomainKind kind, int side) : kind_(kind), side_(side) {}
  DisjDomainKind kind_;
  int side_;
};

// One party's half of a DISJ instance.
class BitAssignment {
 public:
  explicit BitAssignment(DisjDomain domain);
  BitAssignment(DisjDomain domain, std::vector<std::uint8_t> bits);

  const DisjDomain& domain() const { return domain_; }
  bool at(int i, int j) const { return bits_[domain_.offset(i, j)] != 0; }
  void set(int i, int j, bool v) { bits_[domain_.offset(i, j)] = v ? 1 : 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BitAssignment&, const BitAssignment&) = default;

 private:
  DisjDomain domain_;
  std::vector<std::uint8_t> bits_;
};

struct DisjInstance {
  BitAssignment x;  // Alice
  BitAssignment y;  // Bob

  DisjInstance(BitAssignment x_bits, BitAssignment y_bits);
  static DisjInstance Zeros(DisjDomain domain);

  const DisjDomain& domain() const { return x.domain(); }
  // Entries where both bits are set, in storage order.
  std::vector<Couple> intersections() const;
  // DISJ(x, y): 1 when no common entry, else 0.
  int disj() const { return intersections().empty() ? 1 : 0; }

  friend bool operator==(const DisjInstance&, const DisjInstance&) = default;
};

// Absent entry means the instance is disjoint.
struct UniqueIntersectionWitness {
  std::optional<Couple> entry;  // (alpha, beta)
  bool disjoint() const { return !entry.has_value(); }
};

// nullopt when the instance has two or more common entries.
std::optional<UniqueIntersectionWitness> UniqueIntersection(
    const DisjInstance& d);

// Every (x, y) over `domain`: 4^|domain| instances.
void ForEachDisjInstance(const DisjDomain& domain,
                         const std::function<void(const DisjInstance&)>& fn);

// {"domain":"offdiag"|"grid","n":int,"x":[bits],"y":[bits]}
Json DisjToJson(const DisjInstance& d);
DisjInstance DisjFromJson(const Json& j);
std::string SerializeDisj(const DisjInstance& d);
DisjInstance ParseDisj(const std::string& text);

}  // namespace stablelab

#endif  // STABLELAB_EMBED_DISJ_HPP_
