// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Library inputs assembled from brute-force results.

#pragma once

#include <string>

#include "oracles.hpp"
#include "plcpem/bit_vector.hpp"
#include "plcpem/plcp_bits.hpp"
#include "plcpem/textcore.hpp"
#include "plcpem/types.hpp"

namespace plcpem::testing {

inline Bwt bwt_of(const Brute& b, std::uint32_t sigma, bool circular) {
    return Bwt::from_symbols(std::vector<Symbol>(b.bwt.begin(), b.bwt.end()), sigma, circular);
}

inline SampledIsa sisa_of(const Brute& b, Index rate) {
    SampledIsa s;
    s.n = b.isa.size();
    s.rate = rate;
    for (Index p = 0; p < s.n; p += rate) s.ranks.push_back(b.isa[p]);
    return s;
}

inline Text linear_text(const Seq& s) { return Text::linear(std::vector<Symbol>(s.begin(), s.end()), sigma_of(s)); }
inline Text circular_text(const Seq& s, Symbol sigma) {
    return Text::circular(std::vector<Symbol>(s.begin(), s.end()), sigma);
}

inline std::string k_string(const PlcpBits& k) { return k.bits().to_string(); }

/// Everything a builder needs for one linear text.
struct Case {
    Seq seq;
    Brute brute;
    Bwt bwt;
    std::string k;

    static Case linear(Seq seq) {
        Case c;
        c.seq = std::move(seq);
        c.brute = brute_all(c.seq, false);
        c.bwt = bwt_of(c.brute, sigma_of(c.seq), false);
        c.k = brute_k(c.brute.plcp, 0);
        return c;
    }
    [[nodiscard]] Index n() const { return seq.size(); }
    [[nodiscard]] Index max_lcp() const {
        Index m = 0;
        for (auto v : brute.lcp) m = v > m ? v : m;
        return m;
    }
};

}  // namespace plcpem::testing
