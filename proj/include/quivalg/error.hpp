// Copyright 2026 The quivalg Authors
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

#include <stdexcept>
#include <string>

namespace quivalg {

/// Base for all library errors. `what()` carries the location when one is known.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input document.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& msg)
      : Error(where.empty() ? msg : where + ": " + msg), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// A precondition of an operation does not hold (unknown vertex, mixed graphs, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace quivalg
