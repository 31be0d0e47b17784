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

#include "tensorctx/errors.hpp"

namespace tensorctx {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorCode::NotHermitian:
        return "NotHermitian";
    case ErrorCode::NotUnitary:
        return "NotUnitary";
    case ErrorCode::NotOrthonormal:
        return "NotOrthonormal";
    case ErrorCode::NotNormalized:
        return "NotNormalized";
    case ErrorCode::WrongCount:
        return "WrongCount";
    case ErrorCode::TypeMismatch:
        return "TypeMismatch";
    case ErrorCode::ContextMismatch:
        return "ContextMismatch";
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::NumericalFailure:
        return "NumericalFailure";
    case ErrorCode::ParseError:
        return "ParseError";
    case ErrorCode::ResolutionError:
        return "ResolutionError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

namespace {
std::string with_position(const std::string &message, std::size_t line,
                          std::size_t column) {
    if (line == 0) {
        return message;
    }
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
}
} // namespace

ParseError::ParseError(const std::string &message, std::size_t line,
                       std::size_t column)
    : Error(ErrorCode::ParseError, with_position(message, line, column)),
      line_(line), column_(column) {}

ResolutionError::ResolutionError(const std::string &message)
    : Error(ErrorCode::ResolutionError, message) {}

void raise(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

} // namespace tensorctx
