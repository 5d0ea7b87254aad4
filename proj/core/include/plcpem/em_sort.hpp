// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plcpem/em.hpp"
#include "plcpem/error.hpp"

namespace plcpem::em {

/// Stable LSD radix sort made of binary bucket passes. Each pass reads the
/// input once and writes a zero bucket and a one bucket; the returned Run is
/// the two buckets of the last pass back to back.
template <RecordCodec C, class KeyFn>
[[nodiscard]] Run radix_sort(Context& ctx, Run input, const C& codec, KeyFn key, unsigned key_bits,
                             std::string_view tag) {
    for (unsigned bit = 0; bit < key_bits; ++bit) {
        RecordWriter<C> zeros(ctx, std::string(tag) + ".b0", codec);
        RecordWriter<C> ones(ctx, std::string(tag) + ".b1", codec);
        RecordReader<C> in(ctx, input, codec);
        while (in.has_next()) {
            auto rec = in.next();
            if ((key(rec) >> bit) & 1u) {
                ones.push(rec);
            } else {
                zeros.push(rec);
            }
        }
        input = Run({zeros.finish(), ones.finish()});
    }
    return input;
}

/// Inverse binary bucket sort: given key bits K and the stable bucket sort A
/// of some sequence under K, rebuilds that sequence. K is read twice, A once
/// through a zero-region and a one-region cursor.
template <RecordCodec C>
[[nodiscard]] Run bin_un_bucket_sort(Context& ctx, const Run& keys, const Run& sorted, const C& codec,
                                     std::string_view tag) {
    const Index m = keys.size_bits();
    if (sorted.records() != m) {
        throw Error(Errc::LengthMismatch, "key vector and data vector differ in length");
    }
    Index zero_count = 0;
    {
        auto k = ctx.reader(keys);
        for (Index i = 0; i < m; ++i) zero_count += k.get_bit() ? 0 : 1;
    }
    RecordReader<C> zero_region(ctx, sorted, codec);
    RecordReader<C> one_region(ctx, sorted, codec);
    one_region.skip(zero_count);
    RecordWriter<C> out(ctx, tag, codec);
    auto k = ctx.reader(keys);
    for (Index i = 0; i < m; ++i) out.push(k.get_bit() ? one_region.next() : zero_region.next());
    return out.finish();
}

/// Per-level key bits of a symbol sequence, captured while radix sorting it.
///
/// Level l holds bit l of every key in the order the keys had before the
/// l-th pass. With the BWT as key sequence, stable_sort realizes the LF
/// mapping on rank-ordered data and inverse_sort realizes its inverse.
class SymbolSortPlan {
public:
    SymbolSortPlan() = default;
    SymbolSortPlan(Context& ctx, const Run& keys, unsigned width);

    [[nodiscard]] Index size() const noexcept { return n_; }
    [[nodiscard]] unsigned width() const noexcept { return static_cast<unsigned>(levels_.size()); }
    [[nodiscard]] const std::vector<FileRef>& levels() const noexcept { return levels_; }

    template <RecordCodec C>
    [[nodiscard]] Run stable_sort(Context& ctx, Run data, const C& codec, std::string_view tag) const {
        if (data.records() != n_) throw Error(Errc::LengthMismatch, "data length differs from key length");
        for (const auto& level : levels_) {
            RecordWriter<C> zeros(ctx, std::string(tag) + ".b0", codec);
            RecordWriter<C> ones(ctx, std::string(tag) + ".b1", codec);
            RecordReader<C> in(ctx, data, codec);
            auto k = ctx.reader(level);
            while (in.has_next()) {
                auto rec = in.next();
                if (k.get_bit()) {
                    ones.push(rec);
                } else {
                    zeros.push(rec);
                }
            }
            data = Run({zeros.finish(), ones.finish()});
        }
        return data;
    }

    template <RecordCodec C>
    [[nodiscard]] Run inverse_sort(Context& ctx, Run sorted, const C& codec, std::string_view tag) const {
        if (sorted.records() != n_) throw Error(Errc::LengthMismatch, "data length differs from key length");
        for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
            sorted = bin_un_bucket_sort(ctx, Run(*it), sorted, codec, tag);
        }
        return sorted;
    }

private:
    std::vector<FileRef> levels_;
    Index n_ = 0;
};

/// Inverse of a stable symbol sort: keys in original order, data in sorted order.
template <RecordCodec C>
[[nodiscard]] Run inverse_radix_sort(Context& ctx, const Run& keys, unsigned width, const Run& sorted,
                                     const C& codec) {
    if (keys.records() != sorted.records()) {
        throw Error(Errc::LengthMismatch, "key stream and data stream differ in length");
    }
    SymbolSortPlan plan(ctx, keys, width);
    return plan.inverse_sort(ctx, sorted, codec, "unsort");
}

/// (symbol, payload) record with fixed field widths.
struct SymbolPayload {
    std::uint64_t sym = 0;
    std::uint64_t payload = 0;
    friend bool operator==(const SymbolPayload&, const SymbolPayload&) = default;
};

struct SymbolPayloadCodec {
    using value_type = SymbolPayload;
    unsigned sym_width = 8;
    unsigned payload_width = 1;
    void write(BitWriter& w, const SymbolPayload& v) const {
        w.put_bits(v.sym, sym_width);
        w.put_bits(v.payload, payload_width);
    }
    SymbolPayload read(BitReader& r) const {
        SymbolPayload v;
        v.sym = r.get_bits(sym_width);
        v.payload = r.get_bits(payload_width);
        return v;
    }
};

/// Stable sort of (symbol, payload) pairs by symbol in ceil(log2 sigma) passes.
[[nodiscard]] Run em_stable_sort_by_symbol(Context& ctx, const Run& pairs, SymbolPayloadCodec codec);

}  // namespace plcpem::em
