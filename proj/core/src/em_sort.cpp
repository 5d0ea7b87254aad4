// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/em_sort.hpp"

namespace plcpem::em {

SymbolSortPlan::SymbolSortPlan(Context& ctx, const Run& keys, unsigned width) : n_(keys.records()) {
    const FixedCodec codec{width};
    Run current = keys;
    levels_.reserve(width);
    for (unsigned bit = 0; bit < width; ++bit) {
        RecordWriter<BitCodec> level(ctx, "plan.level" + std::to_string(bit));
        RecordWriter<FixedCodec> zeros(ctx, "plan.b0", codec);
        RecordWriter<FixedCodec> ones(ctx, "plan.b1", codec);
        RecordReader<FixedCodec> in(ctx, current, codec);
        while (in.has_next()) {
            const auto sym = in.next();
            const bool b = (sym >> bit) & 1u;
            level.push(b);
            if (b) {
                ones.push(sym);
            } else {
                zeros.push(sym);
            }
        }
        levels_.push_back(level.finish());
        current = Run({zeros.finish(), ones.finish()});
    }
}

Run em_stable_sort_by_symbol(Context& ctx, const Run& pairs, SymbolPayloadCodec codec) {
    return radix_sort(ctx, pairs, codec, [](const SymbolPayload& p) { return p.sym; }, codec.sym_width,
                      "symsort");
}

}  // namespace plcpem::em
