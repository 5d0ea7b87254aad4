// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Rank order to position order. Every sampled ISA entry seeds a chain that
// walks backwards through the text with one sort-based LF step per round,
// collecting one value per position until it reaches the previous sample.

#pragma once

#include <vector>

#include "plcpem/bit_vector.hpp"
#include "plcpem/em.hpp"
#include "plcpem/em_sort.hpp"
#include "plcpem/plcp_bits.hpp"
#include "plcpem/rounds.hpp"
#include "plcpem/textcore.hpp"

namespace plcpem {

struct ChainTuple {
    Index rank = 0;
    Index pos = 0;
    bool active = true;
    std::vector<Index> values;  ///< values[0] belongs to `pos`
    friend bool operator==(const ChainTuple&, const ChainTuple&) = default;
};

struct ChainCodec {
    using value_type = ChainTuple;
    unsigned width = 1;  ///< bits per rank and position
    void write(em::BitWriter& w, const ChainTuple& t) const;
    ChainTuple read(em::BitReader& r) const;
};

struct RankPos {
    Index rank = 0;
    Index pos = 0;
    friend bool operator==(const RankPos&, const RankPos&) = default;
};

struct RankPosCodec {
    using value_type = RankPos;
    unsigned width = 1;
    void write(em::BitWriter& w, const RankPos& v) const {
        w.put_bits(v.rank, width);
        w.put_bits(v.pos, width);
    }
    RankPos read(em::BitReader& r) const {
        RankPos v;
        v.rank = r.get_bits(width);
        v.pos = r.get_bits(width);
        return v;
    }
};

/// Tuples (ISA[i*rate], i*rate) sorted by rank. Throws Errc::RateMismatch.
[[nodiscard]] em::FileRef seed_chains(em::Context& ctx, const SampledIsa& sisa, Index n);

/// Emits the position-order PLCP bit vector from a completed PD, starting at
/// text position `shift`. Throws Errc::RateMismatch.
[[nodiscard]] PlcpBits reorder_pd(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                                  const em::Run& pd, const SampledIsa& sisa, Index shift = 0);
[[nodiscard]] PlcpBits reorder_pd(const BitVector& pd, const Bwt& bwt, const SampledIsa& sisa, Index shift = 0);

/// Inverts the BWT with the same chains. Throws Errc::RateMismatch.
[[nodiscard]] Text reconstruct_text(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                                    const SampledIsa& sisa);
[[nodiscard]] Text reconstruct_text(const Bwt& bwt, const SampledIsa& sisa);

/// (rank, SA[rank]) for every marked rank, sorted by rank.
[[nodiscard]] em::Run annotate_positions(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                                         const SampledIsa& sisa, const em::Run& marks);

/// SA[rank]. Throws Errc::OutOfRange for rank >= n.
[[nodiscard]] Index rank_to_position(em::Context& ctx, const EmBwt& bwt, const em::SymbolSortPlan& plan,
                                     const SampledIsa& sisa, Index rank);
[[nodiscard]] Index rank_to_position(Index rank, const Bwt& bwt, const SampledIsa& sisa);

}  // namespace plcpem
