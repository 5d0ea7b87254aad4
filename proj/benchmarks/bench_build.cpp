// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "plcpem/pipeline.hpp"
#include "plcpem/reorder.hpp"
#include "plcpem/textcore.hpp"

namespace {

using namespace plcpem;

struct Input {
    Bwt bwt;
    SampledIsa sisa;
};

// Random text over {1..sigma} plus terminator, cached per (n, sigma).
const Input& input(Index n, Symbol sigma) {
    static std::map<std::pair<Index, Symbol>, Input> cache;
    auto it = cache.find({n, sigma});
    if (it != cache.end()) return it->second;
    std::mt19937_64 rng(n * 31 + sigma);
    std::uniform_int_distribution<Symbol> sym(1, sigma);
    std::vector<Symbol> s(n);
    for (Index i = 0; i + 1 < n; ++i) s[i] = sym(rng);
    s[n - 1] = 0;
    const Text text = Text::linear(std::move(s), sigma + 1);
    const SuffixArray sa = build_suffix_array(text);
    Input in{build_bwt(text, sa), sample_isa(invert_sa(sa), ceil_log2(n))};
    return cache.emplace(std::make_pair(n, sigma), std::move(in)).first->second;
}

void BM_Build(benchmark::State& state, Strategy strategy) {
    const auto& in = input(static_cast<Index>(state.range(0)), static_cast<Symbol>(state.range(1)));
    BuildOptions opt;
    opt.strategy = strategy;
    BuildReport report;
    for (auto _ : state) {
        auto k = build_plcp(in.bwt, in.sisa, opt, &report);
        benchmark::DoNotOptimize(k);
    }
    state.counters["rounds"] = static_cast<double>(report.rounds);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Reconstruct(benchmark::State& state) {
    const auto& in = input(static_cast<Index>(state.range(0)), 4);
    for (auto _ : state) {
        auto t = reconstruct_text(in.bwt, in.sisa);
        benchmark::DoNotOptimize(t);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void sizes(benchmark::internal::Benchmark* b) {
    for (int64_t n : {1 << 12, 1 << 15, 1 << 18}) {
        for (int64_t sigma : {4, 64}) b->Args({n, sigma});
    }
}

BENCHMARK_CAPTURE(BM_Build, internal, Strategy::Internal)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Build, external, Strategy::External)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Build, hybrid, Strategy::Hybrid)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reconstruct)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

// Smoke size for the external strategy: one million symbols, sigma 4.
BENCHMARK_CAPTURE(BM_Build, external_1m, Strategy::External)
    ->Args({1'000'000, 4})
    ->Iterations(1)
    ->Unit(benchmark::kSecond);

}  // namespace
