// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/wavelet_tree.hpp"

#include <algorithm>

#include "plcpem/error.hpp"

namespace plcpem {

WaveletTree::WaveletTree(std::span<const Symbol> sequence, Symbol sigma)
    : n_(sequence.size()), sigma_(sigma) {
    const unsigned depth = bits_for(sigma == 0 ? 0 : sigma - 1);
    std::vector<Symbol> current(sequence.begin(), sequence.end());
    levels_.reserve(depth);
    for (unsigned level = 0; level < depth; ++level) {
        const unsigned shift = depth - 1 - level;
        BitVector bits(n_);
        for (Index i = 0; i < n_; ++i) bits.set(i, (current[i] >> shift) & 1u);
        levels_.emplace_back(std::move(bits));
        std::stable_sort(current.begin(), current.end(),
                         [shift](Symbol a, Symbol b) { return (a >> shift) < (b >> shift); });
    }
}

void WaveletTree::throw_range() { throw Error(Errc::OutOfRange, "wavelet tree query out of range"); }

Symbol WaveletTree::access(Index i) const {
    if (i >= n_) throw_range();
    Index b = 0, e = n_;
    Symbol sym = 0;
    for (const auto& bv : levels_) {
        const Index zb = bv.rank0(b);
        const Index z = bv.rank0(e) - zb;
        const bool bit = bv[i];
        sym = (sym << 1) | static_cast<Symbol>(bit);
        if (!bit) {
            i = b + bv.rank0(i) - zb;
            e = b + z;
        } else {
            i = b + z + bv.rank1(i) - (b - zb);
            b = b + z;
        }
    }
    return sym;
}

Index WaveletTree::rank(Symbol sym, Index i) const {
    if (sym >= sigma_) return 0;
    i = std::min(i, n_);
    Index b = 0, e = n_;
    for (unsigned level = 0; level < levels(); ++level) {
        const auto& bv = levels_[level];
        const Index zb = bv.rank0(b);
        const Index z = bv.rank0(e) - zb;
        if (!bit_of(sym, level)) {
            i = b + bv.rank0(i) - zb;
            e = b + z;
        } else {
            i = b + z + bv.rank1(i) - (b - zb);
            b = b + z;
        }
    }
    return i - b;
}

Index WaveletTree::select(Symbol sym, Index j) const {
    if (sym >= sigma_) throw_range();
    std::vector<Index> node_begin(levels());
    std::vector<Index> node_zeros(levels());
    Index b = 0, e = n_;
    for (unsigned level = 0; level < levels(); ++level) {
        const auto& bv = levels_[level];
        const Index zb = bv.rank0(b);
        const Index z = bv.rank0(e) - zb;
        node_begin[level] = b;
        node_zeros[level] = z;
        if (!bit_of(sym, level)) {
            e = b + z;
        } else {
            b = b + z;
        }
    }
    if (b + j >= e) throw_range();
    Index p = b + j;
    for (unsigned level = levels(); level-- > 0;) {
        const auto& bv = levels_[level];
        const Index nb = node_begin[level];
        if (!bit_of(sym, level)) {
            p = bv.select0(bv.rank0(nb) + (p - nb));
        } else {
            p = bv.select1(bv.rank1(nb) + (p - nb - node_zeros[level]));
        }
    }
    return p;
}

std::vector<IntervalSymbol> WaveletTree::interval_symbols(Index lo, Index hi) const {
    std::vector<IntervalSymbol> out;
    for_each_interval_symbol(lo, hi, [&](const IntervalSymbol& s) { out.push_back(s); });
    return out;
}

Interval backstep(const WaveletTree& wt, std::span<const Index> starts, Symbol sym, Interval iv) {
    if (iv.lo > iv.hi || iv.hi > wt.size()) throw Error(Errc::OutOfRange, "backstep interval out of range");
    return {starts[sym] + wt.rank(sym, iv.lo), starts[sym] + wt.rank(sym, iv.hi)};
}

Interval backstep(const Bwt& bwt, Symbol sym, Interval iv) {
    if (iv.lo > iv.hi || iv.hi > bwt.size()) throw Error(Errc::OutOfRange, "backstep interval out of range");
    const auto first = bwt.symbols.begin();
    const auto lo_rank = static_cast<Index>(std::count(first, first + iv.lo, sym));
    const auto hi_rank = lo_rank + static_cast<Index>(std::count(first + iv.lo, first + iv.hi, sym));
    return {bwt.starts[sym] + lo_rank, bwt.starts[sym] + hi_rank};
}

Index lf(const WaveletTree& wt, std::span<const Index> starts, Index r) {
    const Symbol sym = wt.access(r);
    return starts[sym] + wt.rank(sym, r);
}

}  // namespace plcpem
