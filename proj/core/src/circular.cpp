// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/circular.hpp"

#include <numeric>
#include <optional>

#include "plcpem/error.hpp"
#include "plcpem/reorder.hpp"

namespace plcpem {
namespace {

/// Shared run-length gcd loop; `next` yields the BWT symbols in order.
template <class Next>
PeriodReport period_from_runs(Index n, Next next) {
    if (n == 0) return {};
    Index e = 0;  // 0 stands for "no run seen yet"
    Index i = 0;
    std::uint64_t c = next();
    while ((e == 0 || e > 1) && i < n) {
        Index j = i + 1;
        std::optional<std::uint64_t> following;
        while (j < n) {
            const std::uint64_t v = next();
            if (v != c) {
                following = v;
                break;
            }
            ++j;
        }
        e = e == 0 ? j - i : std::gcd(j - i, e);
        i = j;
        if (following) c = *following;
    }
    return {n / e, e};
}

}  // namespace

PeriodReport detect_period(const em::Context& ctx, const EmBwt& bwt) {
    auto in = ctx.reader(bwt.symbols);
    return period_from_runs(bwt.n, [&] { return in.get_bits(bwt.width); });
}

PeriodReport detect_period(std::span<const Symbol> bwt) {
    std::size_t k = 0;
    return period_from_runs(bwt.size(), [&] { return std::uint64_t{bwt[k++]}; });
}

Bwt shrink_bwt(const Bwt& bwt, Index exponent) {
    if (exponent == 1) throw Error(Errc::NotAPower, "input is not an integer power");
    if (exponent == 0 || bwt.size() % exponent != 0) {
        throw Error(Errc::LengthMismatch, "exponent does not divide the BWT length");
    }
    std::vector<Symbol> kept;
    kept.reserve(bwt.size() / exponent);
    for (Index i = 0; i < bwt.size(); i += exponent) kept.push_back(bwt.symbols[i]);
    return Bwt::from_symbols(std::move(kept), bwt.sigma, true);
}

Index rotation_shift(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan, const SampledIsa& sisa,
                     Index anchor) {
    Index rank = 0;
    if (anchor > 0) {
        // Symbol boundaries of D, i.e. first ranks of nonempty buckets.
        std::vector<Index> counts(bwt.sigma, 0);
        ctx.meter().observe("circular.anchor_counts", counts.size());
        auto in = ctx.reader(bwt.symbols);
        for (Index r = 0; r < bwt.n; ++r) ++counts[in.get_bits(bwt.width)];
        Index start = 0;
        Index seen = 0;
        bool found = false;
        for (Index c : counts) {
            if (c == 0) continue;
            if (seen++ == anchor) {
                rank = start;
                found = true;
                break;
            }
            start += c;
        }
        if (!found) throw Error(Errc::OutOfRange, "anchor index beyond the number of symbol boundaries");
    }
    const Index pos = rank_to_position(ctx, bwt, plan, sisa, rank);
    return (pos + 1) % bwt.n;
}

PlcpBits build_circular_plcp(em::Context& ctx, const EmBwt& bwt, const SampledIsa& sisa,
                             const BuildOptions& options, BuildReport* report) {
    if (!bwt.circular) throw Error(Errc::InvalidText, "expected a circular BWT");
    if (bwt.n < 2) throw Error(Errc::InvalidText, "circular input needs length > 1");
    const PeriodReport period = detect_period(ctx, bwt);
    if (period.exponent > 1) {
        throw Error(Errc::CircularPowerInput, "circular input is the " + std::to_string(period.exponent) +
                                                  "-th power of a word of length " + std::to_string(period.period));
    }
    const auto plan = bwt.plan(ctx);
    BuildReport local;
    BuildReport& rep = report != nullptr ? *report : local;
    const em::FileRef pd = build_pd(ctx, bwt, plan, sisa, options, &rep);
    rep.shift = rotation_shift(ctx, bwt, plan, sisa, options.anchor);
    return reorder_pd(ctx, bwt, plan, pd, sisa, rep.shift);
}

PlcpBits build_circular_plcp(const Bwt& bwt, const SampledIsa& sisa, const BuildOptions& options,
                             BuildReport* report) {
    em::Context ctx;
    return build_circular_plcp(ctx, EmBwt::store(ctx, bwt), sisa, options, report);
}

}  // namespace plcpem
