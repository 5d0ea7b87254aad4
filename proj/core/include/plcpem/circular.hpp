// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Circular strings: period detection on the BWT, shrinking integer powers to
// their primitive root, and the rotated 2n-bit PLCP vector.

#pragma once

#include <span>

#include "plcpem/em.hpp"
#include "plcpem/pipeline.hpp"
#include "plcpem/plcp_bits.hpp"
#include "plcpem/rounds.hpp"
#include "plcpem/textcore.hpp"

namespace plcpem {

struct PeriodReport {
    Index period = 0;    ///< length of the primitive root
    Index exponent = 0;  ///< n / period
    friend bool operator==(const PeriodReport&, const PeriodReport&) = default;
};

/// The gcd of the BWT run lengths is the exponent. One pass, stops early
/// once the gcd reaches 1.
[[nodiscard]] PeriodReport detect_period(const em::Context& ctx, const EmBwt& bwt);
[[nodiscard]] PeriodReport detect_period(std::span<const Symbol> bwt);

/// Keeps every e-th symbol. Throws Errc::NotAPower when e == 1 and
/// Errc::LengthMismatch when e does not divide n.
[[nodiscard]] Bwt shrink_bwt(const Bwt& bwt, Index exponent);

/// Rotation start for a circular BWT: SA[anchor rank] + 1 mod n.
[[nodiscard]] Index rotation_shift(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                                   const SampledIsa& sisa, Index anchor = 0);

/// Rotated succinct PLCP of a circular non-power text. Throws
/// Errc::CircularPowerInput for powers and Errc::InvalidText for n < 2.
[[nodiscard]] PlcpBits build_circular_plcp(em::Context& ctx, const EmBwt& bwt, const SampledIsa& sisa,
                                           const BuildOptions& options = {}, BuildReport* report = nullptr);
[[nodiscard]] PlcpBits build_circular_plcp(const Bwt& bwt, const SampledIsa& sisa,
                                           const BuildOptions& options = {}, BuildReport* report = nullptr);

}  // namespace plcpem
