// Copyright 2026 The protodef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROTODEF_ERROR_HPP_
#define PROTODEF_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace protodef {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad profile, unknown outcome, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The operation exists but not for this input class (e.g. mixed
// equilibria for more than two agents).
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

// A configured work bound would be exceeded.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, std::uint64_t bound)
      : Error(what + " (bound: " + std::to_string(bound) + ")"),
        bound_(bound) {}

  std::uint64_t bound() const { return bound_; }

 private:
  std::uint64_t bound_;
};

// Syntax error in a protocol source; line and column are 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InvalidInput(std::to_string(line) + ":" + std::to_string(column) +
                     ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace protodef

#endif  // PROTODEF_ERROR_HPP_
