// Copyright 2026 The fsjoin Authors
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

namespace fsjoin {

// Bad parameter or configuration. Maps to exit code 2 at the CLI.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Unreadable input or unwritable output. Maps to exit code 1 at the CLI.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A property that must hold by construction was observed to fail at runtime
// (e.g. an approximate join returning a pair the exact join rejected).
class GuaranteeViolation : public std::logic_error {
 public:
  explicit GuaranteeViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fsjoin
