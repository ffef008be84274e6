// Copyright 2026 The tunopt Authors
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

#include <stdexcept>
#include <string>

namespace tunopt {

/// Raised when a textual input (OpenQASM, axis string, JSON payload) is
/// malformed. `line()` is 0 when no line information applies.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Raised when a rejection-sampling loop exhausts its retry cap.
class RetryCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tunopt
