// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Cutoff variant: run the round loop for a bounded number of rounds, then
// compute the LCP values of the remaining irreducible ranks directly and
// splice their zero runs into PD.

#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "plcpem/em.hpp"
#include "plcpem/em_sort.hpp"
#include "plcpem/plcp_bits.hpp"
#include "plcpem/rounds.hpp"
#include "plcpem/textcore.hpp"

namespace plcpem {

/// Sparse LCP oracle used for the ranks the round loop left open.
class SparseLcpKernel {
public:
    virtual ~SparseLcpKernel() = default;
    [[nodiscard]] virtual std::string_view name() const noexcept = 0;
    /// |lcp| of the suffixes starting at positions p and q.
    [[nodiscard]] virtual Index lcp(const Text& text, Index p, Index q) = 0;
};

/// Direct symbol comparison on the text.
class DirectLcpKernel final : public SparseLcpKernel {
public:
    [[nodiscard]] std::string_view name() const noexcept override { return "direct"; }
    [[nodiscard]] Index lcp(const Text& text, Index p, Index q) override { return naive_lcp_pair(text, p, q); }
};

/// Throws Errc::UnknownKernel for names other than "direct".
[[nodiscard]] std::unique_ptr<SparseLcpKernel> make_kernel(std::string_view name);

/// (r, SA[r], r-1, SA[r-1]).
struct LcpPairQuery {
    Index rank = 0;
    Index pos = 0;
    Index prev_rank = 0;
    Index prev_pos = 0;
};

struct RankLcp {
    Index rank = 0;
    Index lcp = 0;
    friend bool operator==(const RankLcp&, const RankLcp&) = default;
};

[[nodiscard]] std::vector<RankLcp> sparse_lcp_kernel_direct(const Text& text, std::span<const LcpPairQuery> pairs);

/// Ranks kept as length-n marks plus their count.
struct SparseRankSet {
    em::FileRef marks;
    Index count = 0;
};

/// Unset ranks r with r = 0 or BWT[r-1] != BWT[r]. One pass over each input.
[[nodiscard]] SparseRankSet irreducible_missing(em::Context& ctx, const EmBwt& bwt, const em::Run& set);
[[nodiscard]] std::vector<Index> list_ranks(const em::Context& ctx, const SparseRankSet& ranks);

/// Checks that unset reducible ranks carry no zeros and that PD holds n
/// zeros in total; returns PD unchanged. Throws Errc::ReducibleRankNeedsZeros.
em::Run fill_reducible(em::Context& ctx, const EmBwt& bwt, const em::Run& pd, const em::Run& set);

struct HybridStats {
    Index rounds = 0;
    Index n_im = 0;
    Index kernel_calls = 0;
    Index irreducible_lcp_sum = 0;
};

/// PD after `cutoff` rounds plus the kernel fill-in.
[[nodiscard]] em::FileRef hybrid_pd(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                                    const SampledIsa& sisa, Index cutoff, SparseLcpKernel& kernel,
                                    HybridStats* stats = nullptr);

[[nodiscard]] PlcpBits run_hybrid(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                                  const SampledIsa& sisa, Index cutoff, SparseLcpKernel& kernel,
                                  HybridStats* stats = nullptr);
[[nodiscard]] PlcpBits run_hybrid(const Bwt& bwt, const SampledIsa& sisa, Index cutoff, SparseLcpKernel& kernel,
                                  HybridStats* stats = nullptr);

/// Suggested cutoff, 3 * ceil(log2 n).
[[nodiscard]] constexpr Index default_cutoff(Index n) noexcept { return 3 * ceil_log2(n); }

}  // namespace plcpem
