// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "plcpem/bit_vector.hpp"
#include "plcpem/types.hpp"

namespace plcpem {

/// Succinct PLCP bit vector K: for each position in (rotated) text order,
/// d zero bits followed by a one bit, where d is the PLCP difference plus one.
///
/// `shift` is the text position the encoding starts at. Linear texts always
/// use shift 0; circular texts are rotated so the last encoded value is 0.
class PlcpBits {
public:
    PlcpBits() = default;
    /// Throws Errc::FormatError unless `bits` holds exactly n ones.
    PlcpBits(BitVector bits, Index n, Index shift);

    [[nodiscard]] Index n() const noexcept { return n_; }
    [[nodiscard]] Index shift() const noexcept { return shift_; }
    [[nodiscard]] Index size_bits() const noexcept { return k_.size(); }
    [[nodiscard]] const BitVector& bits() const noexcept { return k_.bits(); }

    /// PLCP value of text position i. Throws Errc::OutOfRange for i >= n.
    [[nodiscard]] Index decode(Index i) const;
    [[nodiscard]] std::vector<Index> decode_all() const;

    friend bool operator==(const PlcpBits& a, const PlcpBits& b) noexcept {
        return a.n_ == b.n_ && a.shift_ == b.shift_ && a.k_.bits() == b.k_.bits();
    }

private:
    RsBitVector k_;
    Index n_ = 0;
    Index shift_ = 0;
};

/// Encodes PLCP in position order starting at position `shift`.
/// Throws Errc::DiffBoundViolation if some consecutive difference is below -1.
[[nodiscard]] PlcpBits plcp_encode(const PlcpArray& plcp, Index shift = 0);

}  // namespace plcpem
