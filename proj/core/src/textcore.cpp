// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/textcore.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "plcpem/error.hpp"

namespace plcpem {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidText: return "InvalidText";
        case Errc::CircularPowerInput: return "CircularPowerInput";
        case Errc::TruncatedCode: return "TruncatedCode";
        case Errc::NotIncreasing: return "NotIncreasing";
        case Errc::DiffBoundViolation: return "DiffBoundViolation";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::RateMismatch: return "RateMismatch";
        case Errc::ReducibleRankNeedsZeros: return "ReducibleRankNeedsZeros";
        case Errc::NotAPower: return "NotAPower";
        case Errc::AlphabetTooLarge: return "AlphabetTooLarge";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::HeaderMismatch: return "HeaderMismatch";
        case Errc::FormatError: return "FormatError";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::UnknownKernel: return "UnknownKernel";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

Text::Text(std::vector<Symbol> symbols, Symbol sigma, bool circular)
    : symbols_(std::move(symbols)), sigma_(sigma), circular_(circular) {
    if (symbols_.empty()) throw Error(Errc::InvalidText, "text must not be empty");
    for (Symbol s : symbols_) {
        if (s >= sigma_) {
            throw Error(Errc::InvalidText,
                        "symbol " + std::to_string(s) + " outside alphabet of size " +
                            std::to_string(sigma_));
        }
    }
}

Text Text::linear(std::vector<Symbol> symbols, Symbol sigma) {
    Text text(std::move(symbols), sigma, false);
    const auto& s = text.symbols_;
    if (s.back() != 0 || std::count(s.begin(), s.end(), Symbol{0}) != 1) {
        throw Error(Errc::InvalidText, "linear text must end in a unique terminator 0");
    }
    return text;
}

Text Text::circular(std::vector<Symbol> symbols, Symbol sigma) {
    return Text(std::move(symbols), sigma, true);
}

Bwt Bwt::from_symbols(std::vector<Symbol> symbols, Symbol sigma, bool circular) {
    Bwt bwt;
    bwt.symbols = std::move(symbols);
    bwt.sigma = sigma;
    bwt.circular = circular;
    bwt.counts.assign(sigma, 0);
    for (Symbol s : bwt.symbols) {
        if (s >= sigma) throw Error(Errc::InvalidText, "BWT symbol outside alphabet");
        ++bwt.counts[s];
    }
    bwt.starts.assign(static_cast<std::size_t>(sigma) + 1, 0);
    for (Symbol a = 0; a < sigma; ++a) bwt.starts[a + 1] = bwt.starts[a] + bwt.counts[a];
    return bwt;
}

void SampledIsa::validate() const {
    if (rate == 0) throw Error(Errc::RateMismatch, "sampling rate must be positive");
    if (ranks.size() != ceil_div(n, rate)) {
        throw Error(Errc::RateMismatch, "sampled ISA holds " + std::to_string(ranks.size()) +
                                            " values, expected ceil(" + std::to_string(n) + "/" +
                                            std::to_string(rate) + ")");
    }
}

Index primitive_period(std::span<const Symbol> symbols) {
    const Index n = symbols.size();
    for (Index d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (Index i = d; i < n && periodic; ++i) periodic = symbols[i] == symbols[i - d];
        if (periodic) return d;
    }
    return n;
}

SuffixArray build_suffix_array(const Text& text, PowerPolicy policy) {
    const Index n = text.size();
    std::vector<Index> sa(n);
    std::iota(sa.begin(), sa.end(), Index{0});
    const auto s = text.symbols();

    if (!text.is_circular()) {
        std::sort(sa.begin(), sa.end(), [&](Index a, Index b) {
            return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
        });
        return {std::move(sa)};
    }

    if (policy == PowerPolicy::Reject && primitive_period(s) != n) {
        throw Error(Errc::CircularPowerInput, "circular text is an integer power");
    }
    std::vector<Symbol> doubled(s.begin(), s.end());
    doubled.insert(doubled.end(), s.begin(), s.end());
    std::sort(sa.begin(), sa.end(), [&](Index a, Index b) {
        const auto* pa = doubled.data() + a;
        const auto* pb = doubled.data() + b;
        auto [ma, mb] = std::mismatch(pa, pa + n, pb);
        if (ma == pa + n) return a < b;
        return *ma < *mb;
    });
    return {std::move(sa)};
}

InverseSuffixArray invert_sa(const SuffixArray& sa) {
    std::vector<Index> isa(sa.size());
    for (Index r = 0; r < sa.size(); ++r) isa[sa[r]] = r;
    return {std::move(isa)};
}

SuffixArray invert_isa(const InverseSuffixArray& isa) {
    std::vector<Index> sa(isa.size());
    for (Index p = 0; p < isa.size(); ++p) sa[isa[p]] = p;
    return {std::move(sa)};
}

LcpArray kasai_lcp(const Text& text, const SuffixArray& sa) {
    const Index n = text.size();
    const auto s = text.symbols();
    const auto isa = invert_sa(sa);
    std::vector<Index> lcp(n, 0);
    Index k = 0;
    for (Index i = 0; i < n; ++i) {
        const Index r = isa[i];
        if (r == 0) {
            k = 0;
            continue;
        }
        const Index j = sa[r - 1];
        if (text.is_circular()) {
            while (k < n && s[(i + k) % n] == s[(j + k) % n]) ++k;
        } else {
            while (i + k < n && j + k < n && s[i + k] == s[j + k]) ++k;
        }
        lcp[r] = k;
        if (k > 0) --k;
    }
    return {std::move(lcp)};
}

PlcpArray permute_lcp(const LcpArray& lcp, const InverseSuffixArray& isa) {
    if (lcp.size() != isa.size()) throw Error(Errc::LengthMismatch, "LCP and ISA lengths differ");
    std::vector<Index> plcp(lcp.size());
    for (Index p = 0; p < plcp.size(); ++p) plcp[p] = lcp[isa[p]];
    return {std::move(plcp)};
}

Bwt build_bwt(const Text& text, const SuffixArray& sa) {
    const Index n = text.size();
    if (sa.size() != n) throw Error(Errc::LengthMismatch, "suffix array does not match text");
    std::vector<Symbol> out(n);
    for (Index r = 0; r < n; ++r) out[r] = text[(sa[r] + n - 1) % n];
    return Bwt::from_symbols(std::move(out), text.sigma(), text.is_circular());
}

SampledIsa sample_isa(const InverseSuffixArray& isa, Index rate) {
    if (rate == 0) throw Error(Errc::RateMismatch, "sampling rate must be positive");
    SampledIsa out;
    out.n = isa.size();
    out.rate = rate;
    for (Index p = 0; p < out.n; p += rate) out.ranks.push_back(isa[p]);
    return out;
}

Index naive_lcp_pair(const Text& text, Index p, Index q) {
    const Index n = text.size();
    if (p >= n || q >= n) throw Error(Errc::OutOfRange, "lcp position out of range");
    Index k = 0;
    if (text.is_circular()) {
        while (k < n && text[(p + k) % n] == text[(q + k) % n]) ++k;
    } else {
        while (p + k < n && q + k < n && text[p + k] == text[q + k]) ++k;
    }
    return k;
}

ReferenceIndex ReferenceIndex::build(const Text& text) {
    ReferenceIndex ref;
    ref.sa = build_suffix_array(text);
    ref.isa = invert_sa(ref.sa);
    ref.lcp = kasai_lcp(text, ref.sa);
    ref.plcp = permute_lcp(ref.lcp, ref.isa);
    ref.bwt = build_bwt(text, ref.sa);
    return ref;
}

}  // namespace plcpem
