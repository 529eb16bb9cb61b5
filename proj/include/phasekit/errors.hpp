// Copyright 2026 The phasekit Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phasekit {

// Out-of-range values, mismatched dimensions, unknown segment labels are
// reported as std::domain_error. The two types below cover the rest.

/// A numeric invariant (unitarity, positivity, normalization) failed beyond tolerance.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed function-table text. `line()` is 1-based; 0 means "whole input".
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

    /// Same error with "<path>: " in front of the message.
    ParseError in_file(const std::string &path) const { return ParseError(line_, path + ": " + what(), Raw{}); }

  private:
    struct Raw {};
    ParseError(std::size_t line, const std::string &message, Raw) : std::runtime_error(message), line_(line) {}

    std::size_t line_;
};

}  // namespace phasekit
