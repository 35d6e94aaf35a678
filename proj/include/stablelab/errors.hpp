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

#ifndef STABLELAB_ERRORS_HPP_
#define STABLELAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace stablelab {

// Base of every error the library throws. `kind()` is a stable, lowercase
// token suitable for machine-parseable CLI output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Index out of range, malformed marriage, non-perfect input where a perfect
// marriage is required.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// Brute-force oracle asked to run past its configured size bound.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error("capacity", what) {}
};

// Invalid construction parameters (divisibility, epsilon/delta ranges).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what)
      : Error("parameter", what) {}
};

// Operation called outside its precondition (e.g. a DISJ input that is not
// uniquely intersecting).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error("precondition", what) {}
};

// A protocol party tried to read the other party's private input.
class IsolationFault : public Error {
 public:
  explicit IsolationFault(const std::string& what)
      : Error("isolation", what) {}
};

// Parties disagreed about the schedule or the common output.
class ProtocolFault : public Error {
 public:
  explicit ProtocolFault(const std::string& what) : Error("protocol", what) {}
};

class QueryError : public Error {
 public:
  explicit QueryError(const std::string& what) : Error("query", what) {}
};

// A query that is not answerable from a single side's profile, or a
// non-Boolean query where only Boolean answers can be metered.
class ModelViolation : public Error {
 public:
  explicit ModelViolation(const std::string& what)
      : Error("model-violation", what) {}
};

// A checked construction contract failed. Should never happen.
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what)
      : Error("contract-violation", what) {}
};

// Malformed input file.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error("format", what) {}
};

}  // namespace stablelab

#endif  // STABLELAB_ERRORS_HPP_
