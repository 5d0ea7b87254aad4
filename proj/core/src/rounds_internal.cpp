// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "plcpem/error.hpp"
#include "plcpem/rounds.hpp"
#include "plcpem/wavelet_tree.hpp"

namespace plcpem {

std::vector<Index> pd_counts(const BitVector& pd) {
    std::vector<Index> counts;
    Index run = 0;
    for (Index i = 0; i < pd.size(); ++i) {
        if (pd[i]) {
            counts.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    if (run != 0) throw Error(Errc::FormatError, "PD ends in zero bits");
    return counts;
}

BitVector pd_from_counts(std::span<const Index> counts) {
    BitVector pd;
    for (Index c : counts) {
        pd.put_zeros(c);
        pd.push_back(true);
    }
    return pd;
}

InternalRounds run_rounds_internal(const Bwt& bwt) {
    const Index n = bwt.size();
    InternalRounds result;
    if (n == 0) return result;

    const WaveletTree wt(bwt.symbols, bwt.sigma);
    std::vector<char> set(n, 0);
    std::vector<char> active(n, 0);
    std::vector<Index> active_list;
    std::vector<Index> counts(n, 0);
    std::vector<Interval> queue{{0, n}};
    std::vector<Interval> next;
    std::vector<Index> newly_set;
    Index set_count = 0;

    while (set_count < n && !queue.empty()) {
        if (result.rounds > n) {
            throw Error(bwt.circular ? Errc::CircularPowerInput : Errc::InvalidText,
                        "round loop does not terminate; input is not a valid BWT");
        }
        next.clear();
        newly_set.clear();
        for (const Interval iv : queue) {
            wt.for_each_interval_symbol(iv.lo, iv.hi, [&](const IntervalSymbol& e) {
                const Index lo = bwt.starts[e.sym] + e.rank_at_lo;
                if (set[lo]) return;
                const Index src = wt.select(e.sym, e.rank_at_lo);
                newly_set.push_back(lo);
                if (!set[src] && !active[src]) {
                    active[src] = 1;
                    active_list.push_back(src);
                }
                next.push_back({lo, lo + e.count});
            });
        }
        for (Index r : active_list) ++counts[r];
        for (Index r : newly_set) {
            set[r] = 1;
            active[r] = 0;
        }
        set_count += newly_set.size();
        std::erase_if(active_list, [&](Index r) { return active[r] == 0; });
        queue.swap(next);
        ++result.rounds;
    }
    if (set_count < n) throw Error(Errc::InvalidText, "round loop ended with unset ranks");
    result.pd = pd_from_counts(counts);
    return result;
}

}  // namespace plcpem
