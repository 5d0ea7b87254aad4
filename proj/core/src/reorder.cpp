// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/reorder.hpp"

#include <algorithm>
#include <optional>

#include "plcpem/error.hpp"

namespace plcpem {

void ChainCodec::write(em::BitWriter& w, const ChainTuple& t) const {
    w.put_bits(t.rank, width);
    w.put_bits(t.pos, width);
    w.put_bit(t.active);
    w.put_gamma(t.values.size());
    for (Index v : t.values) w.put_gamma(v);
}

ChainTuple ChainCodec::read(em::BitReader& r) const {
    ChainTuple t;
    t.rank = r.get_bits(width);
    t.pos = r.get_bits(width);
    t.active = r.get_bit();
    t.values.resize(r.get_gamma());
    for (Index& v : t.values) v = r.get_gamma();
    return t;
}

namespace {

struct TaggedChain {
    std::uint64_t sym = 0;
    ChainTuple tuple;
};

struct TaggedChainCodec {
    using value_type = TaggedChain;
    unsigned sym_width = 1;
    ChainCodec chain;
    void write(em::BitWriter& w, const TaggedChain& t) const {
        w.put_bits(t.sym, sym_width);
        chain.write(w, t.tuple);
    }
    TaggedChain read(em::BitReader& r) const {
        TaggedChain t;
        t.sym = r.get_bits(sym_width);
        t.tuple = chain.read(r);
        return t;
    }
};

enum class Collect { Nothing, PdCounts, Symbols };

/// Optional probe: report (rank, pos) whenever a chain visits a marked rank.
struct Probe {
    const em::Run* marks = nullptr;
    em::RecordWriter<RankPosCodec>* hits = nullptr;
};

unsigned pos_width(Index n) { return bits_for(n > 0 ? n - 1 : 0); }

void check_rate(const SampledIsa& sisa, Index n) {
    if (sisa.n != n) throw Error(Errc::RateMismatch, "sampled ISA length differs from BWT length");
    sisa.validate();
}

/// Walks all chains until every one has reached the previous sample and
/// returns the final tuples sorted by rank.
em::FileRef walk_chains(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                        const SampledIsa& sisa, Collect mode, const em::Run* pd, const Probe& probe) {
    const Index n = bwt.n;
    const Index rate = sisa.rate;
    const ChainCodec codec{pos_width(n)};
    const TaggedChainCodec tagged_codec{bwt.width, codec};
    em::FileRef tuples = seed_chains(ctx, sisa, n);

    if (probe.marks != nullptr) {
        em::RecordReader<ChainCodec> seeds(ctx, tuples, codec);
        auto marks = ctx.reader(*probe.marks);
        Index r = 0;
        while (seeds.has_next()) {
            const ChainTuple t = seeds.next();
            for (; r < t.rank; ++r) (void)marks.get_bit();
            if (marks.get_bit()) probe.hits->push({t.rank, t.pos});
            ++r;
        }
    }

    bool any_active = n > 0;
    while (any_active) {
        // Attach BWT[rank] to each tuple and mark the occupied ranks.
        em::RecordWriter<em::BitCodec> occupied(ctx, "chain.marks");
        em::RecordWriter<TaggedChainCodec> tagged(ctx, "chain.tagged", tagged_codec);
        {
            em::RecordReader<ChainCodec> in(ctx, tuples, codec);
            auto symbols = ctx.reader(bwt.symbols);
            Index r = 0;
            while (in.has_next()) {
                ChainTuple t = in.next();
                for (; r < t.rank; ++r) {
                    (void)symbols.get_bits(bwt.width);
                    occupied.push(false);
                }
                const std::uint64_t sym = symbols.get_bits(bwt.width);
                occupied.push(true);
                ++r;
                if (mode == Collect::Symbols && t.active) t.values.insert(t.values.begin(), sym);
                tagged.push({sym, std::move(t)});
            }
            for (; r < n; ++r) occupied.push(false);
        }
        const em::Run new_ranks = plan.stable_sort(ctx, em::Run(occupied.finish()), em::BitCodec{}, "chain.lf");
        const em::Run by_symbol = em::radix_sort(
            ctx, em::Run(tagged.finish()), tagged_codec, [](const TaggedChain& t) { return t.sym; }, bwt.width,
            "chain.sort");

        // The stable symbol sort lists the tuples in LF order, so zipping
        // them with the mapped marks yields their new ranks.
        em::RecordWriter<ChainCodec> out(ctx, "chain", codec);
        em::RecordReader<TaggedChainCodec> in(ctx, by_symbol, tagged_codec);
        auto marks = ctx.reader(new_ranks);
        std::optional<em::BitReader> pd_in;
        if (mode == Collect::PdCounts) pd_in.emplace(ctx.reader(*pd));
        std::optional<em::BitReader> probe_in;
        if (probe.marks != nullptr) probe_in.emplace(ctx.reader(*probe.marks));
        any_active = false;
        Index longest = 0;
        for (Index r = 0; r < n; ++r) {
            const bool here = marks.get_bit();
            const Index count = pd_in ? pd_in->take_zero_run() : 0;
            const bool wanted = probe_in ? probe_in->get_bit() : false;
            if (!here) continue;
            ChainTuple t = in.next().tuple;
            t.rank = r;
            if (t.active) {
                t.pos = (t.pos + n - 1) % n;
                if (mode == Collect::PdCounts) t.values.insert(t.values.begin(), count);
                if (t.pos % rate == 0) {
                    t.active = false;
                } else if (wanted) {
                    probe.hits->push({r, t.pos});
                }
            }
            any_active = any_active || t.active;
            longest = std::max<Index>(longest, t.values.size());
            out.push(t);
        }
        ctx.meter().observe("chain.values", longest);
        tuples = out.finish();
    }
    return tuples;
}

em::Run sort_by_position(em::Context& ctx, const em::FileRef& tuples, Index n) {
    const ChainCodec codec{pos_width(n)};
    return em::radix_sort(ctx, em::Run(tuples), codec, [](const ChainTuple& t) { return t.pos; }, codec.width,
                          "chain.bypos");
}

em::FileRef write_pd(em::Context& ctx, const BitVector& pd) {
    auto file = em::write_bits(ctx, pd, "pd");
    file->set_records(pd.count_ones());
    return file;
}

}  // namespace

em::FileRef seed_chains(em::Context& ctx, const SampledIsa& sisa, Index n) {
    check_rate(sisa, n);
    const ChainCodec codec{pos_width(n)};
    em::RecordWriter<ChainCodec> seeds(ctx, "chain.seed", codec);
    for (Index i = 0; i < sisa.ranks.size(); ++i) {
        if (sisa.ranks[i] >= n) throw Error(Errc::OutOfRange, "sampled rank beyond n");
        seeds.push(ChainTuple{sisa.ranks[i], i * sisa.rate, true, {}});
    }
    const em::Run sorted = em::radix_sort(ctx, em::Run(seeds.finish()), codec,
                                          [](const ChainTuple& t) { return t.rank; }, codec.width, "chain.seed");
    em::RecordWriter<ChainCodec> out(ctx, "chain", codec);
    em::RecordReader<ChainCodec> in(ctx, sorted, codec);
    while (in.has_next()) out.push(in.next());
    return out.finish();
}

PlcpBits reorder_pd(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan, const em::Run& pd,
                    const SampledIsa& sisa, Index shift) {
    const Index n = bwt.n;
    check_rate(sisa, n);
    if (pd.records() != n) throw Error(Errc::LengthMismatch, "PD rank count differs from n");
    if (n > 0 && shift >= n) throw Error(Errc::OutOfRange, "shift must be below n");
    const em::FileRef tuples = walk_chains(ctx, bwt, plan, sisa, Collect::PdCounts, &pd, Probe{});
    const em::Run ordered = sort_by_position(ctx, tuples, n);

    // Positions from shift onwards first, then the wrapped head.
    BitVector k;
    Index emitted = 0;
    for (int pass = 0; pass < 2; ++pass) {
        em::RecordReader<ChainCodec> in(ctx, ordered, ChainCodec{pos_width(n)});
        while (in.has_next()) {
            const ChainTuple t = in.next();
            for (Index i = 0; i < t.values.size(); ++i) {
                const bool tail = t.pos + i >= shift;
                if (tail != (pass == 0)) continue;
                k.put_zeros(t.values[i]);
                k.push_back(true);
                ++emitted;
            }
        }
    }
    if (emitted != n) throw Error(Errc::RateMismatch, "chains did not cover every position");
    return PlcpBits(std::move(k), n, shift);
}

PlcpBits reorder_pd(const BitVector& pd, const Bwt& bwt, const SampledIsa& sisa, Index shift) {
    em::Context ctx;
    const EmBwt stored = EmBwt::store(ctx, bwt);
    const auto plan = stored.plan(ctx);
    return reorder_pd(ctx, stored, plan, em::Run(write_pd(ctx, pd)), sisa, shift);
}

Text reconstruct_text(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                      const SampledIsa& sisa) {
    const Index n = bwt.n;
    check_rate(sisa, n);
    const em::FileRef tuples = walk_chains(ctx, bwt, plan, sisa, Collect::Symbols, nullptr, Probe{});
    std::vector<Symbol> symbols;
    symbols.reserve(n);
    em::RecordReader<ChainCodec> in(ctx, sort_by_position(ctx, tuples, n), ChainCodec{pos_width(n)});
    while (in.has_next()) {
        for (Index v : in.next().values) symbols.push_back(static_cast<Symbol>(v));
    }
    if (symbols.size() != n) throw Error(Errc::RateMismatch, "chains did not cover every position");
    return bwt.circular ? Text::circular(std::move(symbols), bwt.sigma) : Text::linear(std::move(symbols), bwt.sigma);
}

Text reconstruct_text(const Bwt& bwt, const SampledIsa& sisa) {
    em::Context ctx;
    const EmBwt stored = EmBwt::store(ctx, bwt);
    return reconstruct_text(ctx, stored, stored.plan(ctx), sisa);
}

em::Run annotate_positions(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                           const SampledIsa& sisa, const em::Run& marks) {
    const Index n = bwt.n;
    if (marks.records() != n) throw Error(Errc::LengthMismatch, "rank marks differ in length from n");
    const RankPosCodec codec{pos_width(n)};
    em::RecordWriter<RankPosCodec> hits(ctx, "annotate.hits", codec);
    (void)walk_chains(ctx, bwt, plan, sisa, Collect::Nothing, nullptr, Probe{&marks, &hits});
    return em::radix_sort(ctx, em::Run(hits.finish()), codec, [](const RankPos& v) { return v.rank; },
                          codec.width, "annotate.sort");
}

Index rank_to_position(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                       const SampledIsa& sisa, Index rank) {
    if (rank >= bwt.n) throw Error(Errc::OutOfRange, "rank beyond n");
    em::RecordWriter<em::BitCodec> marks(ctx, "probe");
    for (Index r = 0; r < bwt.n; ++r) marks.push(r == rank);
    const auto found = em::read_all(ctx, annotate_positions(ctx, bwt, plan, sisa, em::Run(marks.finish())),
                                    RankPosCodec{pos_width(bwt.n)});
    if (found.size() != 1) throw Error(Errc::RateMismatch, "rank was not visited by any chain");
    return found.front().pos;
}

Index rank_to_position(Index rank, const Bwt& bwt, const SampledIsa& sisa) {
    em::Context ctx;
    const EmBwt stored = EmBwt::store(ctx, bwt);
    return rank_to_position(ctx, stored, stored.plan(ctx), sisa, rank);
}

}  // namespace plcpem
