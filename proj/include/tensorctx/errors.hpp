// Copyright 2026 The tensorctx Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tensorctx {

enum class ErrorCode {
    DimensionMismatch,
    NotHermitian,
    NotUnitary,
    NotOrthonormal,
    NotNormalized,
    WrongCount,
    TypeMismatch,
    ContextMismatch,
    InvalidArgument,
    NumericalFailure,
    ParseError,
    ResolutionError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is
/// stable and is what callers (and the CLI exit-status mapping) branch on.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Scenario-file diagnostic with a 1-based source position. line == 0 means
/// the position could not be recovered.
class ParseError : public Error {
  public:
    ParseError(const std::string &message, std::size_t line,
               std::size_t column);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

class ResolutionError : public Error {
  public:
    explicit ResolutionError(const std::string &message);
};

[[noreturn]] void raise(ErrorCode code, const std::string &message);

} // namespace tensorctx
