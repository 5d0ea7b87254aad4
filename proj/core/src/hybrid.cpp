// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/hybrid.hpp"

#include <optional>

#include "plcpem/error.hpp"
#include "plcpem/reorder.hpp"

namespace plcpem {
namespace {

unsigned pos_width(Index n) { return bits_for(n > 0 ? n - 1 : 0); }

/// A computed LCP value. `irreducible` ranks need a zero run in PD; the
/// others only serve as predecessor values.
struct LcpRecord {
    Index pos = 0;
    Index rank = 0;
    Index lcp = 0;
    bool irreducible = false;
};

struct LcpRecordCodec {
    using value_type = LcpRecord;
    unsigned width = 1;
    unsigned lcp_width = 1;
    void write(em::BitWriter& w, const LcpRecord& v) const {
        w.put_bits(v.pos, width);
        w.put_bits(v.rank, width);
        w.put_bits(v.lcp, lcp_width);
        w.put_bit(v.irreducible);
    }
    LcpRecord read(em::BitReader& r) const {
        LcpRecord v;
        v.pos = r.get_bits(width);
        v.rank = r.get_bits(width);
        v.lcp = r.get_bits(lcp_width);
        v.irreducible = r.get_bit();
        return v;
    }
};

struct RankCount {
    Index rank = 0;
    Index count = 0;
};

struct RankCountCodec {
    using value_type = RankCount;
    unsigned width = 1;
    void write(em::BitWriter& w, const RankCount& v) const {
        w.put_bits(v.rank, width);
        w.put_gamma(v.count);
    }
    RankCount read(em::BitReader& r) const {
        RankCount v;
        v.rank = r.get_bits(width);
        v.count = r.get_gamma();
        return v;
    }
};

em::FileRef erase_active_zeros(em::Context& ctx, const em::Run& pd, const em::Run& active) {
    auto in = ctx.reader(pd);
    auto marks = ctx.reader(active);
    auto out = ctx.writer("pd");
    const Index n = active.records();
    for (Index r = 0; r < n; ++r) {
        const Index zeros = in.take_zero_run();
        if (!marks.get_bit()) out.put_zeros(zeros);
        out.put_bit(true);
    }
    auto file = out.finish();
    file->set_records(n);
    return file;
}

}  // namespace

std::unique_ptr<SparseLcpKernel> make_kernel(std::string_view name) {
    if (name == "direct") return std::make_unique<DirectLcpKernel>();
    throw Error(Errc::UnknownKernel, "unknown sparse LCP kernel '" + std::string(name) + "'");
}

std::vector<RankLcp> sparse_lcp_kernel_direct(const Text& text, std::span<const LcpPairQuery> pairs) {
    std::vector<RankLcp> out;
    out.reserve(pairs.size());
    for (const auto& q : pairs) out.push_back({q.rank, naive_lcp_pair(text, q.pos, q.prev_pos)});
    return out;
}

SparseRankSet irreducible_missing(em::Context& ctx, const EmBwt& bwt, const em::Run& set) {
    if (set.records() != bwt.n) throw Error(Errc::LengthMismatch, "set marks differ in length from n");
    em::RecordWriter<em::BitCodec> marks(ctx, "im");
    auto symbols = ctx.reader(bwt.symbols);
    auto s = ctx.reader(set);
    SparseRankSet out;
    std::uint64_t prev = 0;
    for (Index r = 0; r < bwt.n; ++r) {
        const std::uint64_t sym = symbols.get_bits(bwt.width);
        const bool missing = !s.get_bit() && (r == 0 || prev != sym);
        marks.push(missing);
        out.count += missing ? 1 : 0;
        prev = sym;
    }
    out.marks = marks.finish();
    return out;
}

std::vector<Index> list_ranks(const em::Context& ctx, const SparseRankSet& ranks) {
    std::vector<Index> out;
    em::RecordReader<em::BitCodec> in(ctx, ranks.marks);
    for (Index r = 0; in.has_next(); ++r) {
        if (in.next()) out.push_back(r);
    }
    return out;
}

em::Run fill_reducible(em::Context& ctx, const EmBwt& bwt, const em::Run& pd, const em::Run& set) {
    auto in = ctx.reader(pd);
    auto symbols = ctx.reader(bwt.symbols);
    auto s = ctx.reader(set);
    std::uint64_t prev = 0;
    Index total = 0;
    for (Index r = 0; r < bwt.n; ++r) {
        const Index zeros = in.take_zero_run();
        const std::uint64_t sym = symbols.get_bits(bwt.width);
        const bool unset = !s.get_bit();
        if (unset && r > 0 && prev == sym && zeros != 0) {
            throw Error(Errc::ReducibleRankNeedsZeros,
                        "reducible rank " + std::to_string(r) + " carries " + std::to_string(zeros) + " zeros");
        }
        total += zeros;
        prev = sym;
    }
    if (total != bwt.n) {
        throw Error(Errc::ReducibleRankNeedsZeros,
                    "PD holds " + std::to_string(total) + " zeros, expected " + std::to_string(bwt.n));
    }
    return pd;
}

em::FileRef hybrid_pd(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan, const SampledIsa& sisa,
                      Index cutoff, SparseLcpKernel& kernel, HybridStats* stats) {
    const Index n = bwt.n;
    HybridStats local;
    HybridStats& st = stats != nullptr ? *stats : local;
    st = HybridStats{};

    ExternalRounds rounds = run_rounds_external(ctx, bwt, plan, cutoff);
    st.rounds = rounds.rounds;
    if (rounds.complete) return rounds.pd;

    // Partial runs of ranks still collecting zeros are incomplete; drop them.
    const em::FileRef pd = erase_active_zeros(ctx, rounds.pd, rounds.active);

    const SparseRankSet im = irreducible_missing(ctx, bwt, rounds.set);
    st.n_im = im.count;

    // Ranks needing an LCP value: the irreducible ones and their LF images,
    // which sit at the predecessor positions.
    const em::Run im_lf = lf_map_marks(ctx, plan, im.marks);
    em::RecordWriter<em::BitCodec> needs_writer(ctx, "needs");
    em::RecordWriter<em::BitCodec> annotate_writer(ctx, "needs.pred");
    {
        auto a = ctx.reader(im.marks);
        auto b = ctx.reader(im_lf);
        bool prev_need = false;
        for (Index r = 0; r < n; ++r) {
            const bool need = a.get_bit() | b.get_bit();
            needs_writer.push(need);
            if (r > 0) annotate_writer.push(prev_need || need);
            prev_need = need;
        }
        if (n > 0) annotate_writer.push(prev_need);
    }
    const em::FileRef needs = needs_writer.finish();
    const em::Run positions = annotate_positions(ctx, bwt, plan, sisa, em::Run(annotate_writer.finish()));

    const LcpRecordCodec lcp_codec{pos_width(n), bits_for(n)};
    em::RecordWriter<LcpRecordCodec> lcps(ctx, "lcp", lcp_codec);
    {
        std::optional<Text> text;
        em::RecordReader<RankPosCodec> in(ctx, positions, RankPosCodec{pos_width(n)});
        auto need_marks = ctx.reader(needs);
        auto im_marks = ctx.reader(im.marks);
        std::optional<RankPos> prev;
        Index r = 0;
        while (in.has_next()) {
            const RankPos cur = in.next();
            bool need = false;
            bool irreducible = false;
            for (; r <= cur.rank; ++r) {
                need = need_marks.get_bit();
                irreducible = im_marks.get_bit();
            }
            if (need) {
                Index value = 0;
                if (cur.rank > 0) {
                    if (!prev || prev->rank + 1 != cur.rank) {
                        throw Error(Errc::InvalidText, "missing predecessor rank for LCP pair");
                    }
                    if (!text) {
                        text = reconstruct_text(ctx, bwt, plan, sisa);
                        ctx.meter().observe("hybrid.kernel_text", text->size());
                    }
                    value = kernel.lcp(*text, cur.pos, prev->pos);
                    ++st.kernel_calls;
                }
                if (irreducible) st.irreducible_lcp_sum += value;
                lcps.push({cur.pos, cur.rank, value, irreducible});
            }
            prev = cur;
        }
    }

    // Position order: each irreducible record is preceded by the record of
    // the previous text position. Position 0 pairs with n-1 at the end.
    const em::Run by_pos = em::radix_sort(ctx, em::Run(lcps.finish()), lcp_codec,
                                          [](const LcpRecord& v) { return v.pos; }, lcp_codec.width, "lcp.bypos");
    const RankCountCodec count_codec{pos_width(n)};
    em::RecordWriter<RankCountCodec> counts(ctx, "counts", count_codec);
    {
        em::RecordReader<LcpRecordCodec> in(ctx, by_pos, lcp_codec);
        std::optional<LcpRecord> first;
        std::optional<LcpRecord> prev;
        auto emit = [&](const LcpRecord& cur, const std::optional<LcpRecord>& before) {
            const Index want = cur.pos == 0 ? n - 1 : cur.pos - 1;
            if (!before || before->pos != want || cur.lcp + 1 < before->lcp) {
                throw Error(Errc::InvalidText, "no usable predecessor for position " + std::to_string(cur.pos));
            }
            counts.push({cur.rank, cur.lcp + 1 - before->lcp});
        };
        while (in.has_next()) {
            const LcpRecord cur = in.next();
            if (cur.irreducible) {
                if (cur.pos == 0) {
                    first = cur;
                } else {
                    emit(cur, prev);
                }
            }
            prev = cur;
        }
        if (first) emit(*first, prev);
    }
    const em::Run by_rank = em::radix_sort(ctx, em::Run(counts.finish()), count_codec,
                                           [](const RankCount& v) { return v.rank; }, count_codec.width,
                                           "counts.byrank");

    auto out = ctx.writer("pd");
    {
        auto in = ctx.reader(pd);
        em::RecordReader<RankCountCodec> fill(ctx, by_rank, count_codec);
        RankCount next{n, 0};  // rank n: nothing left to insert
        if (fill.has_next()) next = fill.next();
        for (Index r = 0; r < n; ++r) {
            Index zeros = in.take_zero_run();
            if (next.rank == r) {
                zeros += next.count;
                next = fill.has_next() ? fill.next() : RankCount{n, 0};
            }
            out.put_zeros(zeros);
            out.put_bit(true);
        }
    }
    auto filled = out.finish();
    filled->set_records(n);
    (void)fill_reducible(ctx, bwt, filled, rounds.set);
    return filled;
}

PlcpBits run_hybrid(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan, const SampledIsa& sisa,
                    Index cutoff, SparseLcpKernel& kernel, HybridStats* stats) {
    const em::FileRef pd = hybrid_pd(ctx, bwt, plan, sisa, cutoff, kernel, stats);
    return reorder_pd(ctx, bwt, plan, pd, sisa);
}

PlcpBits run_hybrid(const Bwt& bwt, const SampledIsa& sisa, Index cutoff, SparseLcpKernel& kernel,
                    HybridStats* stats) {
    em::Context ctx;
    const EmBwt stored = EmBwt::store(ctx, bwt);
    return run_hybrid(ctx, stored, stored.plan(ctx), sisa, cutoff, kernel, stats);
}

}  // namespace plcpem
