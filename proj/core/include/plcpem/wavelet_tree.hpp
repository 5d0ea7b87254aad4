// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "plcpem/bit_vector.hpp"
#include "plcpem/textcore.hpp"
#include "plcpem/types.hpp"

namespace plcpem {

/// One symbol of an interval enumeration: its rank at the interval's left
/// end and its number of occurrences inside the interval.
struct IntervalSymbol {
    Symbol sym = 0;
    Index rank_at_lo = 0;
    Index count = 0;
    friend bool operator==(const IntervalSymbol&, const IntervalSymbol&) = default;
};

/// Levelwise (pointerless) balanced wavelet tree. Level l holds one bit per
/// element, the elements being stably sorted by their top l symbol bits, so
/// node boundaries follow from rank queries alone.
class WaveletTree {
public:
    WaveletTree() = default;
    WaveletTree(std::span<const Symbol> sequence, Symbol sigma);

    [[nodiscard]] Index size() const noexcept { return n_; }
    [[nodiscard]] Symbol sigma() const noexcept { return sigma_; }
    [[nodiscard]] unsigned levels() const noexcept { return static_cast<unsigned>(levels_.size()); }

    [[nodiscard]] Symbol access(Index i) const;
    /// Occurrences of sym in [0, i).
    [[nodiscard]] Index rank(Symbol sym, Index i) const;
    /// Position of the (j+1)-th occurrence of sym. Throws Errc::OutOfRange.
    [[nodiscard]] Index select(Symbol sym, Index j) const;
    /// Distinct symbols of [lo, hi) in ascending order. Throws Errc::OutOfRange.
    [[nodiscard]] std::vector<IntervalSymbol> interval_symbols(Index lo, Index hi) const;

    template <class Fn>
    void for_each_interval_symbol(Index lo, Index hi, Fn&& fn) const {
        if (lo > hi || hi > n_) throw_range();
        descend(0, 0, n_, lo, hi, 0, fn);
    }

private:
    [[noreturn]] static void throw_range();
    [[nodiscard]] bool bit_of(Symbol sym, unsigned level) const noexcept {
        return (sym >> (levels() - 1 - level)) & 1u;
    }

    template <class Fn>
    void descend(unsigned level, Index b, Index e, Index lo, Index hi, Symbol prefix, Fn& fn) const {
        if (lo == hi) return;
        if (level == levels()) {
            fn(IntervalSymbol{prefix, lo - b, hi - lo});
            return;
        }
        const RsBitVector& bv = levels_[level];
        const Index zb = bv.rank0(b);
        const Index ob = b - zb;
        const Index z = bv.rank0(e) - zb;
        descend(level + 1, b, b + z, b + bv.rank0(lo) - zb, b + bv.rank0(hi) - zb, prefix << 1, fn);
        descend(level + 1, b + z, e, b + z + bv.rank1(lo) - ob, b + z + bv.rank1(hi) - ob,
                (prefix << 1) | 1u, fn);
    }

    std::vector<RsBitVector> levels_;
    Index n_ = 0;
    Symbol sigma_ = 0;
};

/// B(sym, i) applied to both interval ends: (D[sym] + rank(sym, lo), D[sym] + rank(sym, hi)).
[[nodiscard]] Interval backstep(const WaveletTree& wt, std::span<const Index> starts, Symbol sym,
                                Interval iv);
/// Same as above, with rank computed by scanning the plain BWT.
[[nodiscard]] Interval backstep(const Bwt& bwt, Symbol sym, Interval iv);

/// LF(r) = B(BWT[r], r).
[[nodiscard]] Index lf(const WaveletTree& wt, std::span<const Index> starts, Index r);

}  // namespace plcpem
