/*
 * Copyright 2026 The optchoice Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace optchoice {

enum class ErrorKind {
    InvalidArgument,
    Schema,
    Data,        // malformed input file contents
    Io,
    Resource,    // refused because the work exceeds a configured cap
    Evaluation,  // non-finite score during success-rate evaluation
    Optimization,
    Training,
    Harness,     // a cross-validation fold failed
};

const char* to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; the
// kind decides the C status code and the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace optchoice
