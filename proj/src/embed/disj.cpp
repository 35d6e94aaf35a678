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

#include "stablelab/embed/disj.hpp"

#include "stablelab/errors.hpp"

namespace stablelab {

DisjDomain DisjDomain::OffDiagonal(int n) {
  if (n < 1) throw DomainError("off-diagonal domain needs n >= 1");
  return DisjDomain(DisjDomainKind::kOffDiagonal, n);
}

DisjDomain DisjDomain::Grid(int k) {
  if (k < 1) throw DomainError("grid domain needs k >= 1");
  return DisjDomain(DisjDomainKind::kGrid, k);
}

int DisjDomain::size() const {
  return kind_ == DisjDomainKind::kGrid ? side_ * side_ : side_ * (side_ - 1);
}

bool DisjDomain::contains(int i, int j) const {
  if (i < 1 || i > side_ || j < 1 || j > side_) return false;
  return kind_ == DisjDomainKind::kGrid || i != j;
}

int DisjDomain::offset(int i, int j) const {
  if (!contains(i, j)) {
    throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside the DISJ domain");
  }
  if (kind_ == DisjDomainKind::kGrid) return (i - 1) * side_ + (j - 1);
  return (i - 1) * (side_ - 1) + (j < i ? j - 1 : j - 2);
}

Couple DisjDomain::entry(int off) const {
  if (off < 0 || off >= size()) throw DomainError("DISJ offset out of range");
  if (kind_ == DisjDomainKind::kGrid) {
    return {off / side_ + 1, off % side_ + 1};
  }
  const int i = off / (side_ - 1) + 1;
  const int c = off % (side_ - 1) + 1;
  return {i, c < i ? c : c + 1};
}

BitAssignment::BitAssignment(DisjDomain domain)
    : domain_(domain), bits_(domain.size(), 0) {}

BitAssignment::BitAssignment(DisjDomain domain, std::vector<std::uint8_t> bits)
    : domain_(domain), bits_(std::move(bits)) {
  if (static_cast<int>(bits_.size()) != domain_.size()) {
    throw DomainError("bit vector has " + std::to_string(bits_.size()) +
                      " entries, domain has " +
                      std::to_string(domain_.size()));
  }
  for (auto& b : bits_) {
    if (b > 1) throw DomainError("bits must be 0 or 1");
  }
}

DisjInstance::DisjInstance(BitAssignment x_bits, BitAssignment y_bits)
    : x(std::move(x_bits)), y(std::move(y_bits)) {
  if (!(x.domain() == y.domain())) {
    throw DomainError("x and y are over different domains");
  }
}

DisjInstance DisjInstance::Zeros(DisjDomain domain) {
  return DisjInstance(BitAssignment(domain), BitAssignment(domain));
}

std::vector<Couple> DisjInstance::intersections() const {
  std::vector<Couple> out;
  for (int off = 0; off < domain().size(); ++off) {
    if (x.bits()[off] && y.bits()[off]) out.push_back(domain().entry(off));
  }
  return out;
}

std::optional<UniqueIntersectionWitness> UniqueIntersection(
    const DisjInstance& d) {
  const auto common = d.intersections();
  if (common.size() > 1) return std::nullopt;
  UniqueIntersectionWitness w;
  if (!common.empty()) w.entry = common.front();
  return w;
}

void ForEachDisjInstance(const DisjDomain& domain,
                         const std::function<void(const DisjInstance&)>& fn) {
  const int s = domain.size();
  if (2 * s > 30) throw CapacityError("DISJ domain too large to enumerate");
  const std::uint32_t limit = 1u << (2 * s);
  for (std::uint32_t code = 0; code < limit; ++code) {
    std::vector<std::uint8_t> x(s), y(s);
    for (int b = 0; b < s; ++b) {
      x[b] = (code >> b) & 1u;
      y[b] = (code >> (s + b)) & 1u;
    }
    fn(DisjInstance(BitAssignment(domain, std::move(x)),
                    BitAssignment(domain, std::move(y))));
  }
}

Json DisjToJson(const DisjInstance& d) {
  Json j;
  j["domain"] =
      d.domain().kind() == DisjDomainKind::kGrid ? "grid" : "offdiag";
  j["n"] = d.domain().side();
  j["x"] = d.x.bits();
  j["y"] = d.y.bits();
  return j;
}

namespace {

std::vector<std::uint8_t> BitsField(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw FormatError(std::string("field \"") + key + "\" must be a bit array");
  }
  std::vector<std::uint8_t> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_number_integer()) throw FormatError("bits must be integers");
    const int v = e.get<int>();
    if (v != 0 && v != 1) throw FormatError("bits must be 0 or 1");
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

}  // namespace

DisjInstance DisjFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("n") ||
      !j.at("n").is_number_integer()) {
    throw FormatError("DISJ file needs \"domain\" and integer \"n\"");
  }
  const int n = j.at("n").get<int>();
  const Json& kind = j.at("domain");
  DisjDomain domain = kind == "grid"      ? DisjDomain::Grid(n)
                      : kind == "offdiag" ? DisjDomain::OffDiagonal(n)
                                          : throw FormatError(
                                                "domain must be \"offdiag\" "
                                                "or \"grid\"");
  return DisjInstance(BitAssignment(domain, BitsField(j, "x")),
                      BitAssignment(domain, BitsField(j, "y")));
}

std::string SerializeDisj(const DisjInstance& d) {
  return DisjToJson(d).dump() + "\n";
}

DisjInstance ParseDisj(const std::string& text) {
  try {
    return DisjFromJson(Json::parse(text));
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace stablelab
