/*
 * Copyright 2026 The mavengraph Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mavengraph {

// Every failure the library reports maps to exactly one of these codes. The
// names returned by error_name() are the stable identifiers printed by the
// CLI and exposed through the C API.
enum class ErrorCode {
    MalformedCoordinates,
    UnknownScope,
    EmptyVersion,
    MalformedRange,
    CorruptPom,
    SelfDependency,
    UnknownArtifact,
    ChainsNotBuilt,
    ConsumerBusy,
    SchemaMismatch,
    RowError,
    ChainViolation,
    Nontermination,
    IoError,
    InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

// CSV row failure; line() is the 1-based physical line where the record starts.
class RowError : public Error {
public:
    RowError(std::size_t line, const std::string& message)
        : Error(ErrorCode::RowError, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace mavengraph
