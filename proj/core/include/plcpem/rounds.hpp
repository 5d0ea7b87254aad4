// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Round builders for the rank-order difference vector PD. Round i fixes
// the LCP value of every rank whose value is i. PD holds, for each rank r,
// a run of zeros followed by a one; the run length is the PLCP difference
// between the position of r and its predecessor position, plus one.

#pragma once

#include <limits>
#include <span>
#include <vector>

#include "plcpem/bit_vector.hpp"
#include "plcpem/em.hpp"
#include "plcpem/em_sort.hpp"
#include "plcpem/textcore.hpp"
#include "plcpem/types.hpp"

namespace plcpem {

/// A BWT stored as a stream of fixed-width symbols.
struct EmBwt {
    em::FileRef symbols;
    Index n = 0;
    Symbol sigma = 0;
    unsigned width = 1;
    bool circular = false;

    [[nodiscard]] static EmBwt store(em::Context& ctx, const Bwt& bwt);
    [[nodiscard]] em::FixedCodec codec() const noexcept { return em::FixedCodec{width}; }
    /// LF plan keyed by the BWT symbols.
    [[nodiscard]] em::SymbolSortPlan plan(em::Context& ctx) const;
};

/// Sorted, non-overlapping rank intervals as two gamma-differential streams:
/// lower bounds start at -1, upper bounds at 0.
struct IntervalList {
    em::FileRef lowers;
    em::FileRef uppers;
    Index count = 0;
};

class IntervalWriter {
public:
    IntervalWriter(em::Context& ctx, std::string_view tag);
    /// Throws Errc::NotIncreasing unless intervals are nonempty and strictly to the right of the last one.
    void push(Interval iv);
    IntervalList finish();

private:
    em::BitWriter lowers_;
    em::BitWriter uppers_;
    std::int64_t prev_lo_ = -1;
    Index prev_hi_ = 0;
    Index count_ = 0;
};

class IntervalReader {
public:
    IntervalReader(const em::Context& ctx, const IntervalList& list);
    [[nodiscard]] bool has_next() const noexcept { return remaining_ > 0; }
    Interval next();

private:
    em::BitReader lowers_;
    em::BitReader uppers_;
    std::int64_t prev_lo_ = -1;
    Index prev_hi_ = 0;
    Index remaining_;
};

[[nodiscard]] IntervalList write_intervals(em::Context& ctx, std::span<const Interval> intervals,
                                           std::string_view tag);
[[nodiscard]] std::vector<Interval> read_intervals(const em::Context& ctx, const IntervalList& list);

// ---------------------------------------------------------------------------
// PD helpers

/// Zero-run lengths of a PD vector, one per one bit.
[[nodiscard]] std::vector<Index> pd_counts(const BitVector& pd);
[[nodiscard]] BitVector pd_from_counts(std::span<const Index> counts);

/// n one bits.
[[nodiscard]] em::FileRef pd_initial(em::Context& ctx, Index n);
/// Inserts one zero ahead of one bit #r for every marked rank r. One merge pass.
/// Throws Errc::LengthMismatch when the mark count differs from the one count.
[[nodiscard]] em::FileRef pd_increment(em::Context& ctx, const em::Run& pd, const em::Run& active);

// ---------------------------------------------------------------------------
// Builders

struct InternalRounds {
    BitVector pd;
    Index rounds = 0;
};

/// Wavelet-tree round loop with pruning on already set lower bounds.
[[nodiscard]] InternalRounds run_rounds_internal(const Bwt& bwt);

inline constexpr Index kNoRoundLimit = std::numeric_limits<Index>::max();

/// State of the sort-based round loop. `set` marks ranks whose LCP value is
/// known, `active` ranks currently collecting zeros.
struct ExternalRounds {
    em::FileRef pd;
    em::FileRef set;
    em::FileRef active;
    Index rounds = 0;
    bool complete = false;
};

/// Sort-based round loop over a partition of the rank space. Stops once
/// every rank is set or after `max_rounds` rounds.
[[nodiscard]] ExternalRounds run_rounds_external(em::Context& ctx, const EmBwt& bwt,
                                                 const em::SymbolSortPlan& plan,
                                                 Index max_rounds = kNoRoundLimit);

/// All non-empty one-symbol left extensions of the intervals in L, ascending.
[[nodiscard]] IntervalList backstep_all(em::Context& ctx, const EmBwt& bwt, const IntervalList& l);

/// output[LF(r)] = marks[r].
[[nodiscard]] em::Run lf_map_marks(em::Context& ctx, const em::SymbolSortPlan& plan, const em::Run& marks);

}  // namespace plcpem
