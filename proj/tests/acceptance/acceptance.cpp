// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "plcpem/circular.hpp"
#include "plcpem/em_sort.hpp"
#include "plcpem/error.hpp"
#include "plcpem/gamma.hpp"
#include "plcpem/pipeline.hpp"
#include "plcpem/reorder.hpp"
#include "plcpem/rounds.hpp"

namespace {

using namespace plcpem;
using testing::Case;
using Clock = std::chrono::steady_clock;

/// Collects the first failure message; later failures are only counted.
class Check {
public:
    bool operator()(bool ok, const std::string& what) {
        if (!ok) {
            if (failures_ == 0) first_ = what;
            ++failures_;
        }
        ++checks_;
        return ok;
    }
    [[nodiscard]] bool ok() const { return failures_ == 0; }
    [[nodiscard]] std::string summary() const {
        std::ostringstream s;
        s << checks_ << " checks";
        if (failures_ > 0) s << ", " << failures_ << " failed, first: " << first_;
        return s.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

std::vector<testing::Named> linear_suite() {
    auto suite = testing::random_suite(2026, 510, 256);
    for (auto& a : testing::adversarial_suite()) suite.push_back(std::move(a));
    return suite;
}

std::string ints(const std::vector<Index>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

BuildOptions with(Strategy s, Index cutoff = kNoRoundLimit) {
    BuildOptions o;
    o.strategy = s;
    o.cutoff = cutoff;
    return o;
}

// ---------------------------------------------------------------------------

void ac1(Check& check) {
    const auto s = testing::ranks_of("abbab");
    const auto b = testing::brute_all(s, true);
    const std::vector<Index> expect{2, 1, 0, 0, 3};
    check(b.plcp == expect, "oracle PLCP " + ints(b.plcp));
    const auto plain = plcp_encode(PlcpArray{expect});
    check(plain.bits().to_string() == "0001110100001", "unrotated " + plain.bits().to_string());
    check(plain.size_bits() == 13, "unrotated length");
    const auto bwt = testing::bwt_of(b, 2, true);
    for (auto strategy : {Strategy::Internal, Strategy::External, Strategy::Hybrid}) {
        const auto k = build_circular_plcp(bwt, testing::sisa_of(b, 1), with(strategy));
        const std::string name(to_string(strategy));
        check(k.bits().to_string() == "0000111101", name + " rotated " + k.bits().to_string());
        check(k.size_bits() == 10, name + " length");
        check(k.decode_all() == expect, name + " decode " + ints(k.decode_all()));
    }
}

void ac2_ac3_ac4(Check& ac2, Check& ac3, Check& ac4) {
    for (const auto& named : linear_suite()) {
        const Case c = Case::linear(named.seq);
        const Index n = c.n();
        const auto oracle = plcp_encode(permute_lcp(kasai_lcp(testing::linear_text(c.seq),
                                                              build_suffix_array(testing::linear_text(c.seq))),
                                                    InverseSuffixArray{c.brute.isa}));
        ac2(oracle.bits().to_string() == c.k, named.name + " kasai oracle disagrees with brute force");
        const auto sisa = testing::sisa_of(c.brute, ceil_log2(n));

        std::vector<std::pair<std::string, BuildOptions>> runs{{"internal", with(Strategy::Internal)},
                                                               {"external", with(Strategy::External)}};
        for (Index cutoff : {Index{0}, Index{1}, Index{2}, ceil_log2(n), n}) {
            runs.emplace_back("hybrid/" + std::to_string(cutoff), with(Strategy::Hybrid, cutoff));
        }
        for (const auto& [label, opt] : runs) {
            BuildReport report;
            PlcpBits k;
            try {
                k = build_plcp(c.bwt, sisa, opt, &report);
            } catch (const Error& e) {
                ac2(false, named.name + " " + label + " threw " + e.what());
                continue;
            }
            ac2(k.bits() == oracle.bits(), named.name + " " + label);
            ac3(k.size_bits() == 2 * n && k.bits().count_ones() == n, named.name + " " + label + " size");
            if (opt.strategy != Strategy::Hybrid) {
                ac4(report.rounds == c.max_lcp() + 1,
                    named.name + " " + label + " rounds " + std::to_string(report.rounds) + " max lcp " +
                        std::to_string(c.max_lcp()));
            }
        }
    }

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Symbol sigma = 2 + static_cast<Symbol>(i % 3);
        const auto s = testing::random_circular_primitive(rng, 2 + rng() % 100, sigma);
        const auto b = testing::brute_all(s, true);
        const auto bwt = testing::bwt_of(b, sigma, true);
        const Index n = s.size();
        for (auto strategy : {Strategy::Internal, Strategy::External, Strategy::Hybrid}) {
            const auto k = build_circular_plcp(bwt, testing::sisa_of(b, ceil_log2(n)), with(strategy));
            ac3(k.size_bits() == 2 * n && k.bits().count_ones() == n, "circular " + std::to_string(i) + " size");
            ac3(k.decode_all() == b.plcp, "circular " + std::to_string(i) + " decode");
        }
    }

    const Case worst = Case::linear(testing::worst_case_linear(64));
    ac4(run_rounds_internal(worst.bwt).rounds == 63, "internal rounds on 1^63 0");
    em::Context ctx;
    const auto em_bwt = EmBwt::store(ctx, worst.bwt);
    ac4(run_rounds_external(ctx, em_bwt, em_bwt.plan(ctx)).rounds == 63, "external rounds on 1^63 0");
}

/// Sequential access and bounded resident memory for one external build.
void check_external_run(Check& check, const std::string& label, const Bwt& bwt, const SampledIsa& sisa,
                        const em::Options& opt) {
    em::Context ctx(opt);
    BuildReport report;
    (void)build_plcp(ctx, bwt, sisa, with(Strategy::External), &report);
    const Index rounds = report.rounds;
    check(ctx.total_non_sequential() == 0, label + " non-sequential accesses");
    check(ctx.max_rewinds() <= 8 * rounds,
          label + " rewinds " + std::to_string(ctx.max_rewinds()) + " over " + std::to_string(rounds) + " rounds");
    for (const auto& [owner, peak] : ctx.meter().peaks()) {
        if (owner == "rounds.interval_buffer") {
            check(peak <= opt.im_sort_block, label + " interval buffer " + std::to_string(peak));
        } else if (owner == "chain.values") {
            check(peak <= sisa.rate, label + " chain values " + std::to_string(peak));
        } else {
            check(false, label + " unexpected owner " + owner);
        }
    }
}

void ac5(Check& check) {
    em::Options small;
    small.buffer_bytes = 64;
    small.im_sort_block = 8;
    for (const auto& named : linear_suite()) {
        const Case c = Case::linear(named.seq);
        check_external_run(check, named.name, c.bwt, testing::sisa_of(c.brute, ceil_log2(c.n())), small);
    }
    std::mt19937_64 rng(55);
    for (int i = 0; i < 50; ++i) {
        const auto s = testing::random_circular_primitive(rng, 2 + rng() % 100, 3);
        const auto b = testing::brute_all(s, true);
        check_external_run(check, "circular" + std::to_string(i), testing::bwt_of(b, 3, true),
                           testing::sisa_of(b, 4), small);
    }
    // Larger inputs with default buffers: peaks must not follow n or sigma.
    for (Index n : {5000, 40000}) {
        for (std::uint32_t sigma : {4u, 200u}) {
            const auto s = testing::random_linear(rng, n, sigma);
            const Text t = testing::linear_text(s);
            const auto ref = ReferenceIndex::build(t);
            em::Options opt;
            opt.im_sort_block = 256;
            check_external_run(check, "n" + std::to_string(n) + "s" + std::to_string(sigma), ref.bwt,
                               sample_isa(ref.isa, ceil_log2(n)), opt);
        }
    }
}

void ac6(Check& check) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t l = rng() % 300;
        const Index cap = Index{1} << (rng() % 40);
        GammaStream g;
        Index sum = 0;
        for (std::size_t i = 0; i < l; ++i) {
            const Index v = (trial % 4 == 0) ? 0 : rng() % cap;
            g.put(v);
            sum += v;
        }
        check(g.bits.size() <= l + 2 * sum, "trial " + std::to_string(trial));
        GammaCursor cur(g);
        Index back = 0;
        for (std::size_t i = 0; i < l; ++i) back += cur.get();
        check(back == sum && cur.at_end(), "decode " + std::to_string(trial));
    }
}

void ac7(Check& check) {
    std::mt19937_64 rng(1000);
    for (int trial = 0; trial < 1000; ++trial) {
        em::Context ctx;
        const unsigned width = 1 + rng() % 10;
        const std::size_t m = rng() % 400;
        std::vector<em::SymbolPayload> pairs(m);
        std::vector<std::uint64_t> keys(m), data(m);
        for (std::size_t i = 0; i < m; ++i) {
            keys[i] = rng() & ((1u << width) - 1);
            data[i] = rng() & 0xfffff;
            pairs[i] = {keys[i], data[i]};
        }
        const em::SymbolPayloadCodec pc{width, 20};
        const auto sorted = em::read_all(ctx, em::em_stable_sort_by_symbol(ctx, em::write_all(ctx, pairs, "p", pc), pc), pc);
        std::vector<std::uint64_t> sorted_data;
        for (const auto& p : sorted) sorted_data.push_back(p.payload);
        const em::FixedCodec dc{20};
        const auto back = em::read_all(ctx,
                                       em::inverse_radix_sort(ctx, em::write_all(ctx, keys, "k", em::FixedCodec{width}),
                                                              width, em::write_all(ctx, sorted_data, "s", dc), dc),
                                       dc);
        check(back == data, "trial " + std::to_string(trial));
    }
}

/// Outcome of a circular build: the K bits, or the error code.
std::string circular_outcome(const Bwt& bwt, const SampledIsa& sisa) {
    try {
        return build_circular_plcp(bwt, sisa).bits().to_string();
    } catch (const Error& e) {
        return "error:" + std::string(to_string(e.code()));
    }
}

void ac8(Check& check) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng() % 64;
        const std::uint32_t sigma = 1 + rng() % 3;
        testing::Seq s(n);
        for (auto& c : s) c = static_cast<std::uint32_t>(rng() % sigma);
        const auto b = testing::brute_all(s, true);
        const auto r = detect_period(b.bwt);
        const Index p = testing::brute_period(s);
        check(r.period == p && r.exponent == n / p, "random " + std::to_string(i));
    }
    for (int i = 0; i < 200; ++i) {
        const std::uint32_t sigma = 2 + static_cast<std::uint32_t>(rng() % 3);
        const auto root = testing::random_circular_primitive(rng, 1 + rng() % 32, sigma);
        const std::size_t k = 1 + rng() % 8;
        const auto s = testing::power_of(root, k);
        const auto b = testing::brute_all(s, true);
        const auto bwt = testing::bwt_of(b, sigma, true);
        const auto r = detect_period(bwt.symbols);
        check(r.period == root.size() && r.exponent == k, "power " + std::to_string(i));
        em::Context ctx;
        check(detect_period(ctx, EmBwt::store(ctx, bwt)) == r, "power em " + std::to_string(i));

        const auto rb = testing::brute_all(root, true);
        const auto root_bwt = testing::bwt_of(rb, sigma, true);
        const Bwt shrunk = k > 1 ? shrink_bwt(bwt, k) : bwt;
        check(shrunk.symbols == root_bwt.symbols, "shrink " + std::to_string(i));
        const auto sisa = testing::sisa_of(rb, 1 + i % 4);
        check(circular_outcome(shrunk, sisa) == circular_outcome(root_bwt, sisa), "shrink build " + std::to_string(i));
    }
}

void ac9(Check& check) {
    for (const auto& named : linear_suite()) {
        const Case c = Case::linear(named.seq);
        for (Index rate : {Index{1}, Index{3}, ceil_log2(c.n()), c.n()}) {
            const Text t = reconstruct_text(c.bwt, testing::sisa_of(c.brute, rate));
            check(std::vector<Symbol>(t.symbols().begin(), t.symbols().end()) == c.seq,
                  named.name + " rate " + std::to_string(rate));
        }
    }
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const auto s = testing::random_circular_primitive(rng, 2 + rng() % 100, 4);
        const auto b = testing::brute_all(s, true);
        for (Index rate : {Index{1}, Index{3}, ceil_log2(s.size()), Index{s.size()}}) {
            const Text t = reconstruct_text(testing::bwt_of(b, 4, true), testing::sisa_of(b, rate));
            check(std::vector<Symbol>(t.symbols().begin(), t.symbols().end()) == s,
                  "circular " + std::to_string(i) + " rate " + std::to_string(rate));
        }
    }
}

void ac10(Check& check, double& build_seconds) {
    constexpr Index n = 1'000'000;
    std::mt19937_64 rng(10);
    const auto s = testing::random_linear(rng, n, 4);
    const Text t = testing::linear_text(s);
    const auto ref = ReferenceIndex::build(t);
    const auto sisa = sample_isa(ref.isa, ceil_log2(n));

    em::Context ctx;
    BuildReport report;
    const auto start = Clock::now();
    const auto k = build_plcp(ctx, ref.bwt, sisa, with(Strategy::External), &report);
    build_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    check(build_seconds < 300.0, "external build took " + std::to_string(build_seconds) + " s");
    check(k.bits() == plcp_encode(ref.plcp).bits(), "output differs from oracle");
    check(ctx.total_non_sequential() == 0, "non-sequential accesses");
}

int report(const char* id, const char* title, const Check& check, double seconds, double limit = 0) {
    const bool pass = check.ok() && (limit == 0 || seconds < limit);
    std::printf("%s %s  %s (%s, %.2f s)\n", id, pass ? "PASS" : "FAIL", title, check.summary().c_str(), seconds);
    std::fflush(stdout);
    return pass ? 0 : 1;
}

double timed(const std::function<void()>& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
    int failed = 0;
    Check c1, c2, c3, c4, c5, c6, c7, c8, c9, c10;
    double t = timed([&] { ac1(c1); });
    failed += report("AC1", "circular abbab example", c1, t, 1.0);
    t = timed([&] { ac2_ac3_ac4(c2, c3, c4); });
    failed += report("AC2", "oracle equivalence, every strategy", c2, t, 60.0);
    failed += report("AC3", "2n bits with n ones", c3, t);
    failed += report("AC4", "round count is max LCP + 1", c4, t);
    t = timed([&] { ac5(c5); });
    failed += report("AC5", "sequential access and bounded memory", c5, t);
    t = timed([&] { ac6(c6); });
    failed += report("AC6", "gamma size bound", c6, t);
    t = timed([&] { ac7(c7); });
    failed += report("AC7", "inverse sort identity", c7, t);
    t = timed([&] { ac8(c8); });
    failed += report("AC8", "period detection and shrinking", c8, t);
    t = timed([&] { ac9(c9); });
    failed += report("AC9", "text reconstruction", c9, t);
    double build = 0;
    (void)timed([&] { ac10(c10, build); });
    failed += report("AC10", "external build, n = 10^6, sigma = 4", c10, build, 300.0);
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
