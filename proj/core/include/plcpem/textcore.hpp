// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Reference constructions of suffix structures for linear (terminated) and
// circular texts. Everything here is deliberately simple and serves as the
// ground truth the external-memory builders are checked against.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plcpem/types.hpp"

namespace plcpem {

/// A symbol sequence over the rank alphabet {0..sigma-1}.
///
/// Linear texts end in a unique terminator 0; circular texts carry no such
/// requirement and are compared through their infinite periodic extension.
class Text {
public:
    Text() = default;

    /// Throws Errc::InvalidText unless the last symbol is a unique 0.
    static Text linear(std::vector<Symbol> symbols, Symbol sigma);
    static Text circular(std::vector<Symbol> symbols, Symbol sigma);

    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }
    [[nodiscard]] Symbol operator[](Index i) const { return symbols_[i]; }
    [[nodiscard]] Index size() const noexcept { return symbols_.size(); }
    [[nodiscard]] Symbol sigma() const noexcept { return sigma_; }
    [[nodiscard]] bool is_circular() const noexcept { return circular_; }

    friend bool operator==(const Text&, const Text&) = default;

private:
    Text(std::vector<Symbol> symbols, Symbol sigma, bool circular);

    std::vector<Symbol> symbols_;
    Symbol sigma_ = 0;
    bool circular_ = false;
};

/// Burrows-Wheeler transform with symbol counts C and prefix sums D.
struct Bwt {
    std::vector<Symbol> symbols;
    Symbol sigma = 0;
    bool circular = false;
    std::vector<Index> counts;  // C, length sigma
    std::vector<Index> starts;  // D, length sigma + 1

    /// Builds C and D from the symbol sequence.
    static Bwt from_symbols(std::vector<Symbol> symbols, Symbol sigma, bool circular);

    [[nodiscard]] Index size() const noexcept { return symbols.size(); }
    [[nodiscard]] Symbol operator[](Index i) const { return symbols[i]; }
};

/// ISA values at positions 0, rate, 2*rate, ...
struct SampledIsa {
    Index n = 0;
    Index rate = 1;
    std::vector<Index> ranks;  // ranks[i] = ISA[i * rate]

    /// Throws Errc::RateMismatch unless ranks.size() == ceil(n / rate).
    void validate() const;
    friend bool operator==(const SampledIsa&, const SampledIsa&) = default;
};

enum class PowerPolicy {
    Reject,    ///< circular integer powers raise Errc::CircularPowerInput
    TieBreak,  ///< equal rotations are ordered by start index
};

/// Length of the primitive root of the circular text, by divisor brute force.
[[nodiscard]] Index primitive_period(std::span<const Symbol> symbols);

[[nodiscard]] SuffixArray build_suffix_array(const Text& text,
                                             PowerPolicy policy = PowerPolicy::Reject);
[[nodiscard]] InverseSuffixArray invert_sa(const SuffixArray& sa);
[[nodiscard]] SuffixArray invert_isa(const InverseSuffixArray& isa);

/// Kasai et al. LCP construction; circular texts compare periodic
/// extensions capped at n symbols.
[[nodiscard]] LcpArray kasai_lcp(const Text& text, const SuffixArray& sa);
[[nodiscard]] PlcpArray permute_lcp(const LcpArray& lcp, const InverseSuffixArray& isa);
[[nodiscard]] Bwt build_bwt(const Text& text, const SuffixArray& sa);
[[nodiscard]] SampledIsa sample_isa(const InverseSuffixArray& isa, Index rate);

/// |lcp(p, q)| by direct comparison. Circular texts are capped at n.
[[nodiscard]] Index naive_lcp_pair(const Text& text, Index p, Index q);

/// Convenience bundle of every reference structure for one text.
struct ReferenceIndex {
    SuffixArray sa;
    InverseSuffixArray isa;
    LcpArray lcp;
    PlcpArray plcp;
    Bwt bwt;

    static ReferenceIndex build(const Text& text);
};

}  // namespace plcpem
