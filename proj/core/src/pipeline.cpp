// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/pipeline.hpp"

#include "plcpem/circular.hpp"
#include "plcpem/error.hpp"
#include "plcpem/hybrid.hpp"
#include "plcpem/reorder.hpp"

namespace plcpem {

std::string_view to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::Internal: return "internal";
        case Strategy::External: return "external";
        case Strategy::Hybrid: return "hybrid";
    }
    return "unknown";
}

Strategy parse_strategy(std::string_view name) {
    if (name == "internal") return Strategy::Internal;
    if (name == "external") return Strategy::External;
    if (name == "hybrid") return Strategy::Hybrid;
    throw Error(Errc::FormatError, "unknown strategy '" + std::string(name) + "'");
}

em::FileRef build_pd(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan, const SampledIsa& sisa,
                     const BuildOptions& options, BuildReport* report) {
    BuildReport local;
    BuildReport& rep = report != nullptr ? *report : local;
    switch (options.strategy) {
        case Strategy::Internal: {
            auto symbols = em::read_all(ctx, bwt.symbols, bwt.codec());
            const Bwt plain = Bwt::from_symbols(std::vector<Symbol>(symbols.begin(), symbols.end()), bwt.sigma,
                                                bwt.circular);
            InternalRounds result = run_rounds_internal(plain);
            rep.rounds = result.rounds;
            auto file = em::write_bits(ctx, result.pd, "pd");
            file->set_records(bwt.n);
            return file;
        }
        case Strategy::External: {
            ExternalRounds result = run_rounds_external(ctx, bwt, plan);
            rep.rounds = result.rounds;
            return result.pd;
        }
        case Strategy::Hybrid: {
            auto kernel = make_kernel(options.kernel);
            const Index cutoff = options.cutoff == kNoRoundLimit ? default_cutoff(bwt.n) : options.cutoff;
            HybridStats stats;
            em::FileRef pd = hybrid_pd(ctx, bwt, plan, sisa, cutoff, *kernel, &stats);
            rep.rounds = stats.rounds;
            rep.kernel_calls = stats.kernel_calls;
            return pd;
        }
    }
    throw Error(Errc::FormatError, "unknown strategy");
}

PlcpBits build_plcp(em::Context& ctx, const Bwt& bwt, const SampledIsa& sisa, const BuildOptions& options,
                    BuildReport* report) {
    const EmBwt stored = EmBwt::store(ctx, bwt);
    if (bwt.circular) return build_circular_plcp(ctx, stored, sisa, options, report);
    BuildReport local;
    BuildReport& rep = report != nullptr ? *report : local;
    const auto plan = stored.plan(ctx);
    const em::FileRef pd = build_pd(ctx, stored, plan, sisa, options, &rep);
    rep.shift = 0;
    return reorder_pd(ctx, stored, plan, pd, sisa);
}

PlcpBits build_plcp(const Bwt& bwt, const SampledIsa& sisa, const BuildOptions& options, BuildReport* report) {
    em::Context ctx;
    return build_plcp(ctx, bwt, sisa, options, report);
}

PlcpBits reference_plcp(const Text& text) {
    const ReferenceIndex ref = ReferenceIndex::build(text);
    const Index n = text.size();
    const Index shift = text.is_circular() && n > 0 ? (ref.sa[0] + 1) % n : 0;
    return plcp_encode(ref.plcp, shift);
}

}  // namespace plcpem
