// Copyright 2026 The Tribridge Authors. All rights reserved.
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

#ifndef TRIBRIDGE_ERRORS_HPP_
#define TRIBRIDGE_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace tribridge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (cards, calls, hands, policy specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operation requested in a state that does not admit it.
class StateError : public Error {
 public:
  using Error::Error;
};

// Out-of-range arguments for the combinatorics and harness functions.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A call or card that breaks a game rule. `rule()` is a stable identifier
// such as "must-follow-suit" that clients can match on.
class IllegalAction : public Error {
 public:
  IllegalAction(std::string rule, const std::string& detail)
      : Error(rule + ": " + detail), rule_(std::move(rule)) {}

  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

// Optimistic-concurrency failure: the caller's state version is stale.
class Conflict : public Error {
 public:
  using Error::Error;
};

}  // namespace tribridge

#endif  // TRIBRIDGE_ERRORS_HPP_
