// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <vector>

#include "plcpem/error.hpp"
#include "plcpem/rounds.hpp"

namespace plcpem {
namespace {

/// One element of the extension sequence: a BWT symbol and, for the first
/// occurrence of the symbol inside its source interval, the occurrence count.
struct ZRecord {
    std::uint64_t sym = 0;
    Index count = 0;
};

struct ZCodec {
    using value_type = ZRecord;
    unsigned width = 1;
    void write(em::BitWriter& w, const ZRecord& z) const {
        w.put_bits(z.sym, width);
        w.put_gamma(z.count);
    }
    ZRecord read(em::BitReader& r) const {
        ZRecord z;
        z.sym = r.get_bits(width);
        z.count = r.get_gamma();
        return z;
    }
};

constexpr auto kSymKey = [](const ZRecord& z) { return z.sym; };

em::FileRef zero_marks(em::Context& ctx, Index n, std::string_view tag) {
    auto w = ctx.writer(tag);
    w.put_zeros(n);
    auto file = w.finish();
    file->set_records(n);
    return file;
}

/// Builds Z for the intervals of L in one BWT pass. Symbols outside every
/// interval are emitted with count 0, so Z always has n entries and its
/// stable symbol sort lines up with rank order.
em::FileRef build_z(em::Context& ctx, const EmBwt& bwt, const IntervalList& list) {
    const unsigned w = bwt.width;
    const em::FixedCodec sym_codec = bwt.codec();
    const Index block = ctx.options().im_sort_block;
    em::RecordWriter<ZCodec> z(ctx, "z", ZCodec{w});
    auto in = ctx.reader(bwt.symbols);
    IntervalReader q(ctx, list);
    Index pos = 0;
    std::vector<std::uint64_t> buffer;

    auto copy_gap = [&](Index upto) {
        for (; pos < upto; ++pos) z.push({in.get_bits(w), 0});
    };

    while (q.has_next()) {
        const Interval iv = q.next();
        if (iv.hi > bwt.n) throw Error(Errc::OutOfRange, "interval beyond the BWT");
        copy_gap(iv.lo);
        const Index width = iv.width();
        if (width <= block) {
            buffer.clear();
            for (Index i = 0; i < width; ++i) buffer.push_back(in.get_bits(w));
            ctx.meter().observe("rounds.interval_buffer", buffer.size());
            std::sort(buffer.begin(), buffer.end());
            for (std::size_t i = 0; i < buffer.size();) {
                std::size_t j = i + 1;
                while (j < buffer.size() && buffer[j] == buffer[i]) ++j;
                z.push({buffer[i], j - i});
                for (std::size_t k = i + 1; k < j; ++k) z.push({buffer[i], 0});
                i = j;
            }
        } else {
            // Wide interval: sort the slice externally, then take two passes,
            // the first collecting run lengths, the second emitting Z.
            em::RecordWriter<em::FixedCodec> slice(ctx, "z.slice", sym_codec);
            for (Index i = 0; i < width; ++i) slice.push(in.get_bits(w));
            const em::Run sorted = em::radix_sort(
                ctx, em::Run(slice.finish()), sym_codec, [](std::uint64_t v) { return v; }, w, "z.slice");
            em::RecordWriter<em::GammaCodec> runs(ctx, "z.runs");
            {
                em::RecordReader<em::FixedCodec> r(ctx, sorted, sym_codec);
                std::uint64_t current = r.next();
                Index length = 1;
                while (r.has_next()) {
                    const auto v = r.next();
                    if (v == current) {
                        ++length;
                    } else {
                        runs.push(length);
                        current = v;
                        length = 1;
                    }
                }
                runs.push(length);
            }
            em::RecordReader<em::GammaCodec> lengths(ctx, em::Run(runs.finish()));
            em::RecordReader<em::FixedCodec> r(ctx, sorted, sym_codec);
            while (lengths.has_next()) {
                const Index length = lengths.next();
                const auto v = r.next();
                z.push({v, length});
                for (Index k = 1; k < length; ++k) z.push({r.next(), 0});
            }
        }
        pos = iv.hi;
    }
    copy_gap(bwt.n);
    return z.finish();
}

}  // namespace

// ---------------------------------------------------------------------------

EmBwt EmBwt::store(em::Context& ctx, const Bwt& bwt) {
    EmBwt out;
    out.n = bwt.size();
    out.sigma = bwt.sigma;
    out.width = bits_for(bwt.sigma > 0 ? bwt.sigma - 1 : 0);
    out.circular = bwt.circular;
    out.symbols = em::write_all(ctx, bwt.symbols, "bwt", out.codec());
    return out;
}

em::SymbolSortPlan EmBwt::plan(em::Context& ctx) const { return em::SymbolSortPlan(ctx, symbols, width); }

IntervalWriter::IntervalWriter(em::Context& ctx, std::string_view tag)
    : lowers_(ctx.writer(std::string(tag) + ".lo")), uppers_(ctx.writer(std::string(tag) + ".hi")) {}

void IntervalWriter::push(Interval iv) {
    const auto lo = static_cast<std::int64_t>(iv.lo);
    if (lo <= prev_lo_ || iv.hi <= iv.lo || iv.lo < prev_hi_) {
        throw Error(Errc::NotIncreasing, "intervals must be non-empty, sorted and disjoint");
    }
    lowers_.put_gamma(static_cast<Index>(lo - prev_lo_ - 1));
    uppers_.put_gamma(iv.hi - prev_hi_ - 1);
    prev_lo_ = lo;
    prev_hi_ = iv.hi;
    ++count_;
}

IntervalList IntervalWriter::finish() {
    IntervalList list{lowers_.finish(), uppers_.finish(), count_};
    list.lowers->set_records(count_);
    list.uppers->set_records(count_);
    return list;
}

IntervalReader::IntervalReader(const em::Context& ctx, const IntervalList& list)
    : lowers_(ctx.reader(list.lowers)), uppers_(ctx.reader(list.uppers)), remaining_(list.count) {}

Interval IntervalReader::next() {
    const auto lo = prev_lo_ + 1 + static_cast<std::int64_t>(lowers_.get_gamma());
    const Index hi = prev_hi_ + 1 + uppers_.get_gamma();
    prev_lo_ = lo;
    prev_hi_ = hi;
    --remaining_;
    return {static_cast<Index>(lo), hi};
}

IntervalList write_intervals(em::Context& ctx, std::span<const Interval> intervals, std::string_view tag) {
    IntervalWriter w(ctx, tag);
    for (const Interval iv : intervals) w.push(iv);
    return w.finish();
}

std::vector<Interval> read_intervals(const em::Context& ctx, const IntervalList& list) {
    std::vector<Interval> out;
    IntervalReader r(ctx, list);
    while (r.has_next()) out.push_back(r.next());
    return out;
}

em::FileRef pd_initial(em::Context& ctx, Index n) {
    auto w = ctx.writer("pd");
    for (Index i = 0; i < n; ++i) w.put_bit(true);
    auto file = w.finish();
    file->set_records(n);
    return file;
}

em::FileRef pd_increment(em::Context& ctx, const em::Run& pd, const em::Run& active) {
    const Index n = active.records();
    if (pd.records() != n) throw Error(Errc::LengthMismatch, "PD and active marks differ in rank count");
    auto in = ctx.reader(pd);
    auto marks = ctx.reader(active);
    auto out = ctx.writer("pd");
    for (Index r = 0; r < n; ++r) {
        const Index zeros = in.take_zero_run() + (marks.get_bit() ? 1 : 0);
        out.put_zeros(zeros);
        out.put_bit(true);
    }
    auto file = out.finish();
    file->set_records(n);
    return file;
}

em::Run lf_map_marks(em::Context& ctx, const em::SymbolSortPlan& plan, const em::Run& marks) {
    return plan.stable_sort(ctx, marks, em::BitCodec{}, "lf");
}

IntervalList backstep_all(em::Context& ctx, const EmBwt& bwt, const IntervalList& l) {
    const ZCodec codec{bwt.width};
    const em::Run z = em::radix_sort(ctx, em::Run(build_z(ctx, bwt, l)), codec, kSymKey, bwt.width, "z.sort");
    em::RecordReader<ZCodec> zr(ctx, z, codec);
    IntervalWriter out(ctx, "extensions");
    for (Index r = 0; zr.has_next(); ++r) {
        const ZRecord rec = zr.next();
        if (rec.count != 0) out.push({r, r + rec.count});
    }
    return out.finish();
}

ExternalRounds run_rounds_external(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                                   Index max_rounds) {
    const Index n = bwt.n;
    const ZCodec codec{bwt.width};
    ExternalRounds st;
    st.pd = pd_initial(ctx, n);
    st.set = zero_marks(ctx, n, "set");
    st.active = zero_marks(ctx, n, "active");
    Index set_count = 0;
    const Interval all{0, n};
    IntervalList queue = write_intervals(ctx, n == 0 ? std::span<const Interval>{} : std::span(&all, 1), "q");

    while (set_count < n && st.rounds < max_rounds) {
        if (st.rounds == n) {
            throw Error(bwt.circular ? Errc::CircularPowerInput : Errc::InvalidText,
                        "round loop does not terminate; input is not a valid BWT");
        }
        const em::Run z = em::radix_sort(ctx, em::Run(build_z(ctx, bwt, queue)), codec, kSymKey, bwt.width,
                                         "z.sort");

        // Ranks that become set this round. Z is indexed by rank here, so S
        // is read alongside it in order.
        em::RecordWriter<em::BitCodec> fresh(ctx, "zprime");
        {
            em::RecordReader<ZCodec> zr(ctx, z, codec);
            auto s = ctx.reader(st.set);
            while (zr.has_next()) {
                const bool nonzero = zr.next().count != 0;
                const bool already = s.get_bit();
                fresh.push(nonzero && !already);
            }
        }
        // Back to source ranks: fresh_src[r] = fresh[LF(r)].
        const em::Run fresh_src = plan.inverse_sort(ctx, em::Run(fresh.finish()), em::BitCodec{}, "zprime.unsort");

        em::RecordWriter<em::BitCodec> activated(ctx, "active");
        {
            auto f = ctx.reader(fresh_src);
            auto s = ctx.reader(st.set);
            auto a = ctx.reader(st.active);
            for (Index r = 0; r < n; ++r) {
                const bool lf_fresh = f.get_bit();
                const bool already = s.get_bit();
                const bool was_active = a.get_bit();
                activated.push(was_active || (lf_fresh && !already));
            }
        }
        const em::FileRef active = activated.finish();
        st.pd = pd_increment(ctx, st.pd, active);

        em::RecordWriter<em::BitCodec> next_set(ctx, "set");
        em::RecordWriter<em::BitCodec> next_active(ctx, "active");
        IntervalWriter next_queue(ctx, "q");
        {
            em::RecordReader<ZCodec> zr(ctx, z, codec);
            auto s = ctx.reader(st.set);
            auto a = ctx.reader(active);
            for (Index r = 0; r < n; ++r) {
                const Index count = zr.next().count;
                const bool already = s.get_bit();
                const bool is_active = a.get_bit();
                if (count != 0) {
                    if (!already) ++set_count;
                    next_queue.push({r, r + count});
                }
                next_set.push(already || count != 0);
                next_active.push(is_active && count == 0);
            }
        }
        st.set = next_set.finish();
        st.active = next_active.finish();
        queue = next_queue.finish();
        ++st.rounds;
        ctx.count_round();
    }
    st.complete = set_count == n;
    return st;
}

}  // namespace plcpem
