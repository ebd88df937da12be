// Copyright 2026 The majlab Authors
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

namespace majlab {

/// Index or parameter outside its admissible range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Input violates an operation's precondition (wrong boundary, non-eigenstate, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Formula evaluated at a pole or outside its validity regime.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Requested object exceeds a documented size cap.
struct ResourceError : std::length_error {
    using std::length_error::length_error;
};

/// Internal consistency check failed (leakage, non-Hermitian result, ...).
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed braid word. `position` is the 0-based character offset of the bad token.
struct ParseError : std::invalid_argument {
    ParseError(const std::string &msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace majlab
