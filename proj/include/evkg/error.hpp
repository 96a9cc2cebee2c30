// Copyright 2026 The evkg Authors.
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

#ifndef EVKG_ERROR_HPP_
#define EVKG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace evkg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input (CoNLL-U, JSON Lines, question files).
class ParseError : public Error {
 public:
  ParseError(const std::string &source, int line, const std::string &what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  const std::string &source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// A call whose arguments violate a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Lookup of an eventuality key that is not in the graph.
class UnknownEventuality : public Error {
 public:
  explicit UnknownEventuality(const std::string &key)
      : Error("unknown eventuality: " + key), key_(key) {}
  const std::string &key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace evkg

#endif  // EVKG_ERROR_HPP_
