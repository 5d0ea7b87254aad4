// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "plcpem/em_sort.hpp"
#include "plcpem/gamma.hpp"
#include "plcpem/wavelet_tree.hpp"

namespace {

using namespace plcpem;

void BM_GammaEncode(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<Index> v(static_cast<std::size_t>(state.range(0)));
    for (auto& x : v) x = rng() % 64;
    for (auto _ : state) {
        GammaStream s;
        for (Index x : v) s.put(x);
        benchmark::DoNotOptimize(s.bits.size());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GammaEncode)->Arg(1 << 16)->Arg(1 << 20);

void BM_InverseSort(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto width = static_cast<unsigned>(state.range(1));
    std::mt19937_64 rng(2);
    std::vector<std::uint64_t> keys(m), data(m);
    for (auto& k : keys) k = rng() & ((1u << width) - 1);
    for (auto& d : data) d = rng() & 0xffffffff;
    for (auto _ : state) {
        em::Context ctx;
        const auto kf = em::write_all(ctx, keys, "k", em::FixedCodec{width});
        em::SymbolSortPlan plan(ctx, kf, width);
        const auto sorted = plan.stable_sort(ctx, em::write_all(ctx, data, "d", em::FixedCodec{32}),
                                             em::FixedCodec{32}, "s");
        auto back = plan.inverse_sort(ctx, sorted, em::FixedCodec{32}, "u");
        benchmark::DoNotOptimize(back);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InverseSort)->Args({1 << 16, 2})->Args({1 << 16, 8})->Args({1 << 20, 2});

void BM_WaveletIntervalSymbols(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    std::vector<Symbol> s(n);
    for (auto& c : s) c = static_cast<Symbol>(rng() % 16);
    const WaveletTree wt(s, 16);
    for (auto _ : state) {
        const Index lo = rng() % n;
        const Index hi = lo + (rng() % (n - lo + 1));
        benchmark::DoNotOptimize(wt.interval_symbols(lo, hi));
    }
}
BENCHMARK(BM_WaveletIntervalSymbols)->Arg(1 << 16)->Arg(1 << 20);

}  // namespace
