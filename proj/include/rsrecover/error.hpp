/**************************************************************************
 * Copyright 2026 The rsrecover Authors
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
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsr {

enum class ErrorKind {
    PolynomialNotPrimitive,
    InvalidSubgroupOrder,
    DivisionByZero,
    DimensionError,
    SingularMatrix,
    NotACodewordBasis,
    InvalidCodeParameters,
    ZeroMultiplier,
    SpectrumStructureViolation,
    TrailingNonzero,
    InstanceTooLarge,
    ParameterTooSmall,
    RecoveryMismatch,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::PolynomialNotPrimitive: return "PolynomialNotPrimitive";
    case ErrorKind::InvalidSubgroupOrder: return "InvalidSubgroupOrder";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotACodewordBasis: return "NotACodewordBasis";
    case ErrorKind::InvalidCodeParameters: return "InvalidCodeParameters";
    case ErrorKind::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorKind::SpectrumStructureViolation: return "SpectrumStructureViolation";
    case ErrorKind::TrailingNonzero: return "TrailingNonzero";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::ParameterTooSmall: return "ParameterTooSmall";
    case ErrorKind::RecoveryMismatch: return "RecoveryMismatch";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail)
{
    throw Error(kind, detail);
}

} // namespace rsr
