// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plcpem/error.hpp"
#include "plcpem/rounds.hpp"

namespace plcpem {
namespace {

using testing::Case;
using testing::ranks_of;

std::string pd_string(const em::Context& ctx, const em::FileRef& pd) { return em::read_bits(ctx, pd).to_string(); }

/// PD files count one record per rank.
em::FileRef pd_file(em::Context& ctx, std::string_view bits) {
    const auto bv = BitVector::from_string(bits);
    auto f = em::write_bits(ctx, bv, "pd");
    f->set_records(bv.count_ones());
    return f;
}

std::vector<bool> marks_of(const em::Context& ctx, const em::Run& run) {
    return em::read_all(ctx, run, em::BitCodec{});
}

TEST(PdIncrementTest, Examples) {
    em::Context ctx;
    const auto one = pd_file(ctx, "11");
    EXPECT_EQ(pd_string(ctx, pd_increment(ctx, one, em::write_marks(ctx, std::vector<bool>{true, false}, "a"))),
              "011");
    EXPECT_EQ(pd_string(ctx, pd_increment(ctx, one, em::write_marks(ctx, std::vector<bool>{false, false}, "a"))),
              "11");
    const auto two = pd_file(ctx, "0101");
    EXPECT_EQ(pd_string(ctx, pd_increment(ctx, two, em::write_marks(ctx, std::vector<bool>{true, true}, "a"))),
              "001001");
    try {
        (void)pd_increment(ctx, one, em::write_marks(ctx, std::vector<bool>{true}, "a"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::LengthMismatch);
    }
}

TEST(PdCountsTest, RoundTrip) {
    const std::vector<Index> counts{1, 1, 0, 4, 1, 0, 0};
    EXPECT_EQ(pd_from_counts(counts).to_string(), "01011000010111");
    EXPECT_EQ(pd_counts(BitVector::from_string("01011000010111")), counts);
    EXPECT_THROW((void)pd_counts(BitVector::from_string("0110")), Error);
}

TEST(IntervalListTest, RoundTripAndOrdering) {
    em::Context ctx;
    const std::vector<Interval> ivs{{0, 1}, {1, 4}, {4, 5}, {5, 7}};
    EXPECT_EQ(read_intervals(ctx, write_intervals(ctx, ivs, "iv")), ivs);
    IntervalWriter w(ctx, "bad");
    w.push({2, 4});
    EXPECT_THROW(w.push({3, 5}), Error);
    EXPECT_THROW(w.push({6, 6}), Error);
}

class BananaRounds : public ::testing::Test {
protected:
    Case c = Case::linear(ranks_of("banana$"));
    em::Context ctx;
    EmBwt bwt = EmBwt::store(ctx, c.bwt);
};

TEST_F(BananaRounds, BackstepAll) {
    const std::vector<Interval> whole{{0, 7}};
    const auto sigma_ivs = read_intervals(ctx, backstep_all(ctx, bwt, write_intervals(ctx, whole, "l")));
    EXPECT_EQ(sigma_ivs, (std::vector<Interval>{{0, 1}, {1, 4}, {4, 5}, {5, 7}}));
    const auto next = read_intervals(ctx, backstep_all(ctx, bwt, write_intervals(ctx, sigma_ivs, "l")));
    EXPECT_EQ(next, (std::vector<Interval>{{0, 1}, {1, 2}, {2, 4}, {4, 5}, {5, 7}}));
}

TEST_F(BananaRounds, LfMapMarks) {
    const auto plan = bwt.plan(ctx);
    std::vector<bool> m(7, false);
    m[4] = true;
    std::vector<bool> expect(7, false);
    expect[0] = true;
    EXPECT_EQ(marks_of(ctx, lf_map_marks(ctx, plan, em::write_marks(ctx, m, "m"))), expect);
    const std::vector<bool> all(7, true), none(7, false);
    EXPECT_EQ(marks_of(ctx, lf_map_marks(ctx, plan, em::write_marks(ctx, all, "m"))), all);
    EXPECT_EQ(marks_of(ctx, lf_map_marks(ctx, plan, em::write_marks(ctx, none, "m"))), none);
}

TEST_F(BananaRounds, InternalAndExternalPd) {
    const auto internal = run_rounds_internal(c.bwt);
    EXPECT_EQ(internal.pd.to_string(), "01011000010111");
    EXPECT_EQ(internal.pd.to_string(), testing::brute_pd(c.brute, false));
    EXPECT_EQ(internal.rounds, 4u);
    const auto external = run_rounds_external(ctx, bwt, bwt.plan(ctx));
    EXPECT_TRUE(external.complete);
    EXPECT_EQ(pd_string(ctx, external.pd), "01011000010111");
    EXPECT_EQ(external.rounds, 4u);
    EXPECT_EQ(ctx.total_non_sequential(), 0u);
}

TEST_F(BananaRounds, RoundLimitLeavesUnsetRanks) {
    const auto partial = run_rounds_external(ctx, bwt, bwt.plan(ctx), 2);
    EXPECT_FALSE(partial.complete);
    EXPECT_EQ(partial.rounds, 2u);
    const auto set = marks_of(ctx, partial.set);
    // LCP values above 1 are still open after two rounds.
    for (Index r = 0; r < 7; ++r) EXPECT_EQ(set[r], c.brute.lcp[r] < 2) << r;
}

TEST(RoundsTest, SingleSymbolText) {
    const Case c = Case::linear({1, 0});
    EXPECT_EQ(run_rounds_internal(c.bwt).pd.to_string(), "0101");
    em::Context ctx;
    const auto bwt = EmBwt::store(ctx, c.bwt);
    EXPECT_EQ(pd_string(ctx, run_rounds_external(ctx, bwt, bwt.plan(ctx)).pd), "0101");
}

TEST(RoundsTest, WorstCaseRoundCount) {
    for (Index n : {8, 64}) {
        const Case c = Case::linear(testing::worst_case_linear(n));
        ASSERT_EQ(c.max_lcp(), n - 2);
        EXPECT_EQ(run_rounds_internal(c.bwt).rounds, n - 1);
        em::Context ctx;
        const auto bwt = EmBwt::store(ctx, c.bwt);
        EXPECT_EQ(run_rounds_external(ctx, bwt, bwt.plan(ctx)).rounds, n - 1);
    }
}

TEST(RoundsTest, CircularAbbabPdIsDifferential) {
    const auto s = ranks_of("abbab");
    const auto b = testing::brute_all(s, true);
    const auto bwt = testing::bwt_of(b, 2, true);
    const auto internal = run_rounds_internal(bwt);
    EXPECT_EQ(internal.pd.to_string(), testing::brute_pd(b, true));
    EXPECT_EQ(internal.pd.count_ones(), 5u);
    EXPECT_EQ(internal.pd.size(), 10u);
    em::Context ctx;
    const auto em_bwt = EmBwt::store(ctx, bwt);
    EXPECT_EQ(pd_string(ctx, run_rounds_external(ctx, em_bwt, em_bwt.plan(ctx)).pd), internal.pd.to_string());
}

TEST(RoundsTest, StrategiesAgreeOnRandomTexts) {
    for (const auto& named : testing::random_suite(77, 150, 150)) {
        const Case c = Case::linear(named.seq);
        const auto internal = run_rounds_internal(c.bwt);
        ASSERT_EQ(internal.pd.to_string(), testing::brute_pd(c.brute, false)) << named.name;
        ASSERT_EQ(internal.rounds, c.max_lcp() + 1) << named.name;
        em::Options opt;
        opt.im_sort_block = 4;  // force the external interval path as well
        em::Context ctx(opt);
        const auto bwt = EmBwt::store(ctx, c.bwt);
        const auto external = run_rounds_external(ctx, bwt, bwt.plan(ctx));
        ASSERT_EQ(pd_string(ctx, external.pd), internal.pd.to_string()) << named.name;
        ASSERT_EQ(external.rounds, c.max_lcp() + 1) << named.name;
    }
}

}  // namespace
}  // namespace plcpem
