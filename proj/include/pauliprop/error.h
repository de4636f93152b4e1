// Copyright 2026 The pauliprop Authors
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

#ifndef PAULIPROP_ERROR_H
#define PAULIPROP_ERROR_H

#include <stdexcept>
#include <string>

namespace pauliprop {

/// Error categories. The numeric values are shared with the C API status
/// codes and the CLI exit codes.
enum class ErrorCode : int {
    InvalidArgument = 1,
    Parse = 2,
    Validation = 3,
    BoundOverflow = 4,
    OracleTooLarge = 5,
    ZeroOperator = 6,
    NotCompletelyPositive = 7,
    Solver = 8,
    Unsupported = 9,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }
    ErrorCode code() const noexcept {
        return code_;
    }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace pauliprop

#endif
