// Copyright 2026 The pareto-cover Authors
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

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pareto_cover {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad probabilities, parse failures, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A mathematical function was called outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size or work cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A measure oracle violated its multiplicative accuracy contract.
class OracleContractError : public Error {
 public:
  using Error::Error;
};

// An internal precondition on a call sequence was broken.
class ContractError : public Error {
 public:
  using Error::Error;
};

// The cover leaves positive probability mass uncovered.
class InfeasibleCoverError : public Error {
 public:
  explicit InfeasibleCoverError(mpq_class uncovered)
      : Error("cover is not a Pareto cover: uncovered mass " +
              uncovered.get_str()),
        uncovered_mass_(std::move(uncovered)) {}

  const mpq_class& uncovered_mass() const { return uncovered_mass_; }

 private:
  mpq_class uncovered_mass_;
};

}  // namespace pareto_cover
