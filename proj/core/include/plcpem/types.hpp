// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace plcpem {

using Index = std::uint64_t;
using Symbol = std::uint32_t;

/// Half-open rank interval [lo, hi).
struct Interval {
    Index lo = 0;
    Index hi = 0;

    [[nodiscard]] constexpr Index width() const noexcept { return hi - lo; }
    [[nodiscard]] constexpr bool empty() const noexcept { return lo == hi; }
    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

/// Number of bits needed to store any value in [0, max_value]; at least 1.
[[nodiscard]] constexpr unsigned bits_for(Index max_value) noexcept {
    return max_value == 0 ? 1u : static_cast<unsigned>(std::bit_width(max_value));
}

[[nodiscard]] constexpr Index ceil_div(Index a, Index b) noexcept { return (a + b - 1) / b; }

/// ceil(log2(n)) with a floor of 1, used as the default sampling rate.
[[nodiscard]] constexpr Index ceil_log2(Index n) noexcept {
    if (n <= 2) return 1;
    return static_cast<Index>(std::bit_width(n - 1));
}

/// A permutation-valued or count-valued array with a tag distinguishing its role.
template <class Tag>
struct IndexArray {
    std::vector<Index> values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] Index operator[](std::size_t i) const { return values[i]; }
    [[nodiscard]] auto begin() const noexcept { return values.begin(); }
    [[nodiscard]] auto end() const noexcept { return values.end(); }
    friend bool operator==(const IndexArray&, const IndexArray&) = default;
};

using SuffixArray = IndexArray<struct SuffixArrayTag>;
using InverseSuffixArray = IndexArray<struct InverseSuffixArrayTag>;
using LcpArray = IndexArray<struct LcpArrayTag>;
using PlcpArray = IndexArray<struct PlcpArrayTag>;

}  // namespace plcpem
