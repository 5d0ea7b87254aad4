// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plcpem/error.hpp"
#include "plcpem/hybrid.hpp"
#include "plcpem/rounds.hpp"

namespace plcpem {
namespace {

using testing::Case;
using testing::ranks_of;

std::vector<Index> missing_of(em::Context& ctx, const EmBwt& bwt, const std::vector<bool>& set) {
    return list_ranks(ctx, irreducible_missing(ctx, bwt, em::write_marks(ctx, set, "set")));
}

TEST(IrreducibleMissingTest, Examples) {
    const Case c = Case::linear(ranks_of("banana$"));
    em::Context ctx;
    const auto bwt = EmBwt::store(ctx, c.bwt);
    std::vector<bool> set(7, true);
    set[3] = set[6] = false;
    EXPECT_EQ(missing_of(ctx, bwt, set), (std::vector<Index>{3}));
    EXPECT_TRUE(missing_of(ctx, bwt, std::vector<bool>(7, true)).empty());
    std::vector<bool> only0(7, true);
    only0[0] = false;
    EXPECT_EQ(missing_of(ctx, bwt, only0), (std::vector<Index>{0}));
}

TEST(SparseKernelTest, Examples) {
    const Text banana = Text::linear(ranks_of("banana$"), 4);
    const std::vector<LcpPairQuery> q{{3, 1, 2, 3}, {4, 0, 3, 1}};
    const auto out = sparse_lcp_kernel_direct(banana, q);
    EXPECT_EQ(out, (std::vector<RankLcp>{{3, 3}, {4, 0}}));
    const Text abbab = Text::circular(ranks_of("abbab"), 2);
    // Ranks 3 and 2 hold positions 4 and 2.
    EXPECT_EQ(sparse_lcp_kernel_direct(abbab, std::vector<LcpPairQuery>{{3, 4, 2, 2}}).front().lcp, 3u);
}

TEST(MakeKernelTest, KnownAndUnknownNames) {
    EXPECT_EQ(make_kernel("direct")->name(), "direct");
    try {
        (void)make_kernel("bogus");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownKernel);
    }
}

TEST(FillReducibleTest, AcceptsZeroCountsAndRejectsOthers) {
    const Case c = Case::linear(ranks_of("banana$"));
    em::Context ctx;
    const auto bwt = EmBwt::store(ctx, c.bwt);
    std::vector<bool> set(7, true);
    set[6] = false;
    const auto good = em::write_bits(ctx, BitVector::from_string("01011000010111"), "pd");
    EXPECT_EQ(em::read_bits(ctx, fill_reducible(ctx, bwt, good, em::write_marks(ctx, set, "s"))).to_string(),
              "01011000010111");
    // Rank 6 is reducible; move the zero of rank 0 onto it.
    const auto bad = em::write_bits(ctx, BitVector::from_string("10110000101101"), "pd");
    try {
        (void)fill_reducible(ctx, bwt, bad, em::write_marks(ctx, set, "s"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ReducibleRankNeedsZeros);
    }
}

TEST(HybridTest, BananaCutoffs) {
    const Case c = Case::linear(ranks_of("banana$"));
    DirectLcpKernel kernel;
    for (Index cutoff : {0, 1, 2, 3, 10}) {
        HybridStats stats;
        const auto k = run_hybrid(c.bwt, testing::sisa_of(c.brute, 3), cutoff, kernel, &stats);
        EXPECT_EQ(testing::k_string(k), "01000011110101") << cutoff;
        EXPECT_LE(stats.kernel_calls, 2 * stats.n_im);
        if (cutoff == 2) {
            EXPECT_EQ(stats.n_im, 1u);
        }
        if (cutoff >= 4) {
            EXPECT_EQ(stats.kernel_calls, 0u);
        }
    }
}

TEST(HybridTest, CutoffZeroComputesEveryIrreducibleRank) {
    const Case c = Case::linear(ranks_of("mississippi$"));
    DirectLcpKernel kernel;
    HybridStats stats;
    const auto k = run_hybrid(c.bwt, testing::sisa_of(c.brute, 2), 0, kernel, &stats);
    EXPECT_EQ(testing::k_string(k), c.k);
    Index irreducible = 0;
    for (Index r = 0; r < c.n(); ++r) irreducible += (r == 0 || c.bwt[r - 1] != c.bwt[r]) ? 1 : 0;
    EXPECT_EQ(stats.n_im, irreducible);
}

TEST(HybridTest, PdMatchesFullRoundsOnRandomSuite) {
    DirectLcpKernel kernel;
    for (const auto& named : testing::random_suite(9, 80, 120)) {
        const Case c = Case::linear(named.seq);
        for (Index cutoff : {Index{0}, Index{1}, Index{2}, ceil_log2(c.n()), c.n()}) {
            em::Context ctx;
            const auto bwt = EmBwt::store(ctx, c.bwt);
            const auto plan = bwt.plan(ctx);
            const auto pd = hybrid_pd(ctx, bwt, plan, testing::sisa_of(c.brute, 3), cutoff, kernel);
            ASSERT_EQ(em::read_bits(ctx, pd).to_string(), testing::brute_pd(c.brute, false))
                << named.name << " cutoff " << cutoff;
        }
    }
}

TEST(HybridTest, DefaultCutoff) {
    EXPECT_EQ(default_cutoff(7), 9u);
    EXPECT_EQ(default_cutoff(2), 3u);
}

}  // namespace
}  // namespace plcpem
