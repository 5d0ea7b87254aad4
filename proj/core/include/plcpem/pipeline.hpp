// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end construction: BWT + sampled ISA in, succinct PLCP out.

#pragma once

#include <string>
#include <string_view>

#include "plcpem/em.hpp"
#include "plcpem/em_sort.hpp"
#include "plcpem/plcp_bits.hpp"
#include "plcpem/rounds.hpp"
#include "plcpem/textcore.hpp"

namespace plcpem {

enum class Strategy : std::uint8_t { Internal = 0, External = 1, Hybrid = 2 };

[[nodiscard]] std::string_view to_string(Strategy s) noexcept;
/// Throws Errc::FormatError for unknown names.
[[nodiscard]] Strategy parse_strategy(std::string_view name);

struct BuildOptions {
    Strategy strategy = Strategy::External;
    /// Hybrid round cutoff; kNoRoundLimit selects 3 * ceil(log2 n).
    Index cutoff = kNoRoundLimit;
    std::string kernel = "direct";
    /// Circular inputs only: the rotation is anchored at the k-th symbol
    /// boundary of the D array, boundary 0 being rank 0.
    Index anchor = 0;
};

struct BuildReport {
    Index rounds = 0;
    Index shift = 0;
    Index kernel_calls = 0;
};

/// Rank-order PD for any strategy.
[[nodiscard]] em::FileRef build_pd(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                                   const SampledIsa& sisa, const BuildOptions& options,
                                   BuildReport* report = nullptr);

/// Full pipeline. Circular inputs are routed through the rotated builder.
[[nodiscard]] PlcpBits build_plcp(em::Context& ctx, const Bwt& bwt, const SampledIsa& sisa,
                                  const BuildOptions& options = {}, BuildReport* report = nullptr);
[[nodiscard]] PlcpBits build_plcp(const Bwt& bwt, const SampledIsa& sisa, const BuildOptions& options = {},
                                  BuildReport* report = nullptr);

/// Reference result straight from the brute-force oracles.
[[nodiscard]] PlcpBits reference_plcp(const Text& text);

}  // namespace plcpem
