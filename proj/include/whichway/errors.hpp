// Copyright 2026 The whichway Authors
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

namespace whichway {

/// Bad input: out-of-domain parameters, unnormalized states, malformed
/// configuration. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string &what)
        : std::invalid_argument(what) {}
};

/// Valid input that produced an unusable numeric result (non-finite values,
/// intensities below the clamp window, an empty pattern). Maps to exit code 2.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string &what) : std::runtime_error(what) {}
};

namespace detail {
[[noreturn]] inline void fail_validation(const std::string &msg) {
    throw ValidationError(msg);
}
[[noreturn]] inline void fail_numeric(const std::string &msg) {
    throw NumericError(msg);
}
} // namespace detail

#define WW_REQUIRE(cond, msg)                                                  \
    do {                                                                       \
        if (!(cond)) {                                                         \
            ::whichway::detail::fail_validation(msg);                          \
        }                                                                      \
    } while (0)

} // namespace whichway
