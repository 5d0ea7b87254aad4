// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "plcpem/bit_vector.hpp"
#include "plcpem/error.hpp"
#include "plcpem/gamma.hpp"
#include "plcpem/plcp_bits.hpp"
#include "plcpem/wavelet_tree.hpp"

namespace plcpem {
namespace {

std::string gamma_bits(Index v) {
    GammaStream s;
    s.put(v);
    return s.bits.to_string();
}

TEST(GammaTest, Codewords) {
    EXPECT_EQ(gamma_bits(0), "1");
    EXPECT_EQ(gamma_bits(1), "010");
    EXPECT_EQ(gamma_bits(4), "00101");
    for (Index v : {0u, 1u, 2u, 3u, 7u, 8u, 1000u, 1u << 20}) EXPECT_EQ(gamma_bits(v).size(), gamma_length(v));
}

TEST(GammaTest, RoundTripAndTruncation) {
    std::mt19937_64 rng(3);
    GammaStream s;
    std::vector<Index> in;
    for (int i = 0; i < 2000; ++i) {
        in.push_back(rng() >> (rng() % 64));
        s.put(in.back());
    }
    GammaCursor c(s);
    for (Index v : in) ASSERT_EQ(c.get(), v);
    EXPECT_TRUE(c.at_end());
    try {
        (void)c.get();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TruncatedCode);
    }
}

TEST(DiffGammaTest, Examples) {
    const std::vector<Index> a{0, 2, 3};
    const auto s = diff_gamma_encode(a, -1);
    EXPECT_EQ(s.bits.to_string(), "10101");
    EXPECT_EQ(diff_gamma_decode(s, -1), a);
    EXPECT_EQ(diff_gamma_encode({}, 7).bits.size(), 0u);
    const std::vector<Index> five{5};
    EXPECT_EQ(diff_gamma_encode(five, 4).bits.to_string(), "1");
    const std::vector<Index> bad{3, 3};
    try {
        (void)diff_gamma_encode(bad, -1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotIncreasing);
    }
}

TEST(RsBitVectorTest, RankSelectAgainstScan) {
    std::mt19937_64 rng(5);
    for (Index n : {1, 63, 64, 65, 511, 512, 513, 5000}) {
        for (int density : {1, 50, 99}) {
            BitVector bv;
            for (Index i = 0; i < n; ++i) bv.push_back(static_cast<int>(rng() % 100) < density);
            RsBitVector rs(bv);
            Index ones = 0;
            std::vector<Index> one_pos, zero_pos;
            for (Index i = 0; i < n; ++i) {
                ASSERT_EQ(rs.rank1(i), ones);
                ASSERT_EQ(rs.rank0(i), i - ones);
                (bv[i] ? one_pos : zero_pos).push_back(i);
                ones += bv[i];
            }
            ASSERT_EQ(rs.rank1(n), ones);
            for (Index j = 0; j < one_pos.size(); ++j) ASSERT_EQ(rs.select1(j), one_pos[j]);
            for (Index j = 0; j < zero_pos.size(); ++j) ASSERT_EQ(rs.select0(j), zero_pos[j]);
            EXPECT_THROW((void)rs.select1(one_pos.size()), Error);
        }
    }
}

TEST(BitVectorTest, BytesAreLsbFirst) {
    const auto bv = BitVector::from_string("1000 0000 01");
    const auto bytes = bv.to_bytes();
    ASSERT_EQ(bytes.size(), 2u);
    EXPECT_EQ(bytes[0], 0x01);
    EXPECT_EQ(bytes[1], 0x02);
    EXPECT_EQ(BitVector::from_bytes(bytes, bv.size()), bv);
}

TEST(PlcpEncodeTest, Examples) {
    EXPECT_EQ(plcp_encode(PlcpArray{{0, 3, 2, 1, 0, 0, 0}}).bits().to_string(), "01000011110101");
    EXPECT_EQ(plcp_encode(PlcpArray{{2, 1, 0, 0, 3}}).bits().to_string(), "0001110100001");
    EXPECT_EQ(plcp_encode(PlcpArray{{3, 2, 1, 0, 0}}).bits().to_string(), "0000111101");
    EXPECT_EQ(plcp_encode(PlcpArray{{2, 1, 0, 0, 3}}, 4).bits().to_string(), "0000111101");
    try {
        (void)plcp_encode(PlcpArray{{3, 0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DiffBoundViolation);
    }
}

TEST(PlcpDecodeTest, Examples) {
    const PlcpBits banana(BitVector::from_string("01000011110101"), 7, 0);
    EXPECT_EQ(banana.decode(1), 3u);
    EXPECT_EQ(banana.decode_all(), (std::vector<Index>{0, 3, 2, 1, 0, 0, 0}));
    const PlcpBits abbab(BitVector::from_string("0001110100001"), 5, 0);
    EXPECT_EQ(abbab.decode(0), 2u);
    const PlcpBits rotated(BitVector::from_string("0000111101"), 5, 4);
    EXPECT_EQ(rotated.decode_all(), (std::vector<Index>{2, 1, 0, 0, 3}));
    EXPECT_THROW((void)banana.decode(7), Error);
    EXPECT_THROW(PlcpBits(BitVector::from_string("0101"), 3, 0), Error);
}

TEST(PlcpEncodeTest, RoundTripOnRandomTexts) {
    for (const auto& c : testing::random_suite(21, 100, 120)) {
        const auto b = testing::brute_all(c.seq, false);
        const auto k = plcp_encode(PlcpArray{b.plcp});
        ASSERT_EQ(k.bits().to_string(), testing::brute_k(b.plcp, 0));
        ASSERT_EQ(k.decode_all(), b.plcp);
    }
}

class WaveletTreeTest : public ::testing::Test {
protected:
    std::vector<Symbol> bwt{1, 3, 3, 2, 0, 1, 1};
    WaveletTree wt{bwt, 4};
    std::vector<Index> starts{0, 1, 4, 5, 7};
};

TEST_F(WaveletTreeTest, Examples) {
    EXPECT_EQ(wt.rank(1, 5), 1u);
    EXPECT_EQ(wt.select(3, 0), 1u);
    const auto syms = wt.interval_symbols(1, 4);
    ASSERT_EQ(syms.size(), 2u);
    EXPECT_EQ(syms[0], (IntervalSymbol{2, 0, 1}));
    EXPECT_EQ(syms[1], (IntervalSymbol{3, 0, 2}));
    for (Index i = 0; i < bwt.size(); ++i) EXPECT_EQ(wt.access(i), bwt[i]);
    EXPECT_THROW((void)wt.select(2, 1), Error);
    EXPECT_THROW((void)wt.interval_symbols(3, 8), Error);
}

TEST_F(WaveletTreeTest, Backstep) {
    EXPECT_EQ(backstep(wt, starts, 1, Interval{0, 7}), (Interval{1, 4}));
    EXPECT_EQ(backstep(wt, starts, 3, Interval{1, 4}), (Interval{5, 7}));
    EXPECT_TRUE(backstep(wt, starts, 0, Interval{0, 3}).empty());
    const Bwt plain = Bwt::from_symbols(bwt, 4, false);
    EXPECT_EQ(backstep(plain, 3, Interval{1, 4}), (Interval{5, 7}));
    EXPECT_EQ(lf(wt, starts, 4), 0u);
}

TEST(WaveletTreeRandomTest, AgreesWithScan) {
    std::mt19937_64 rng(8);
    for (Symbol sigma : {1u, 2u, 3u, 16u, 200u}) {
        std::vector<Symbol> s(300);
        for (auto& c : s) c = static_cast<Symbol>(rng() % sigma);
        WaveletTree wt(s, sigma);
        for (int q = 0; q < 200; ++q) {
            const Symbol c = static_cast<Symbol>(rng() % sigma);
            const Index i = rng() % (s.size() + 1);
            ASSERT_EQ(wt.rank(c, i), static_cast<Index>(std::count(s.begin(), s.begin() + i, c)));
            Index lo = rng() % (s.size() + 1), hi = rng() % (s.size() + 1);
            if (lo > hi) std::swap(lo, hi);
            std::map<Symbol, Index> counts;
            for (Index k = lo; k < hi; ++k) ++counts[s[k]];
            const auto syms = wt.interval_symbols(lo, hi);
            ASSERT_EQ(syms.size(), counts.size());
            auto it = counts.begin();
            for (const auto& e : syms) {
                ASSERT_EQ(e.sym, it->first);
                ASSERT_EQ(e.count, it->second);
                ASSERT_EQ(e.rank_at_lo, wt.rank(e.sym, lo));
                ++it;
            }
        }
    }
}

}  // namespace
}  // namespace plcpem
