// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plcpem {

enum class Errc {
    InvalidText,
    CircularPowerInput,
    TruncatedCode,
    NotIncreasing,
    DiffBoundViolation,
    OutOfRange,
    LengthMismatch,
    RateMismatch,
    ReducibleRankNeedsZeros,
    NotAPower,
    AlphabetTooLarge,
    EmptyInput,
    HeaderMismatch,
    FormatError,
    VerificationFailed,
    UnknownKernel,
    IoError,
};

[[nodiscard]] std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace plcpem
